#include "strattr/modular.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>

#include "strattr/error.hpp"

namespace strattr {

namespace {

Position mod(Position a, Position k) { return ((a % k) + k) % k; }

std::vector<std::string_view> sorted_distinct(WordView w, std::size_t n) {
  std::set<std::string_view> s;
  for (std::size_t i = 0; i + n <= w.size(); ++i) s.insert(as_key(w.subspan(i, n)));
  return {s.begin(), s.end()};
}

Word word_of(std::string_view key) {
  const auto* p = reinterpret_cast<const Letter*>(key.data());
  return Word(p, p + key.size());
}

// Residues of occurrence starts, keyed by factor, for one length.
std::unordered_map<std::string_view, std::vector<bool>> residues_by_factor(const Window& W,
                                                                           std::size_t n,
                                                                           Position k) {
  std::unordered_map<std::string_view, std::vector<bool>> out;
  const auto len = static_cast<Position>(n);
  for (Position t = W.first(); t + len - 1 <= W.last(); ++t) {
    auto& r = out[as_key(W.view(t, t + len - 1))];
    if (r.empty()) r.assign(static_cast<std::size_t>(k), false);
    r[static_cast<std::size_t>(mod(t, k))] = true;
  }
  return out;
}

}  // namespace

bool ResidueSet::contains(Position r) const {
  return std::binary_search(residues.begin(), residues.end(), mod(r, modulus));
}

ResidueSet occ_mod(const BiWordSpec& spec, WordView w, Position k, Position radius,
                   const WorkCeiling& ceiling) {
  if (k < 1) throw PreconditionError("occ_mod needs k >= 1");
  if (w.empty()) throw PreconditionError("occ_mod needs a nonempty word");
  ResidueSet out;
  out.modulus = k;
  out.radius = radius;
  const Window W = window(spec, -radius, radius, ceiling);
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (std::size_t t : occurrences(W.content, w)) {
    seen[static_cast<std::size_t>(mod(W.first() + static_cast<Position>(t), k))] = true;
  }
  for (Position r = 0; r < k; ++r) {
    if (seen[static_cast<std::size_t>(r)]) out.residues.push_back(r);
  }
  return out;
}

CoverageReport ap_attractor_check(const BiWordSpec& spec, Position i, Position k, std::size_t N,
                                  Position radius, const WorkCeiling& ceiling) {
  if (k < 1) throw PreconditionError("ap_attractor_check needs k >= 1");
  LanguageSample sample =
      sample_language(spec, N, std::max<Position>(radius, static_cast<Position>(N)), ceiling);
  const Position R = std::max(radius, sample.radius);
  const Window W = R == sample.radius ? sample.window : window(spec, -R, R, ceiling);

  CoverageReport rep;
  rep.N = N;
  rep.radius = R;
  rep.gamma = PositionSet::progression(i, k);
  for (std::size_t n = 1; n <= N; ++n) {
    auto occ = residues_by_factor(W, n, k);
    const auto len = static_cast<Position>(n);
    for (std::string_view f : sorted_distinct(sample.window.content, n)) {
      const auto it = occ.find(f);
      bool ok = false;
      if (it != occ.end()) {
        for (Position d = 0; d < std::min(len, k) && !ok; ++d) {
          ok = it->second[static_cast<std::size_t>(mod(i - d, k))];
        }
      }
      if (!ok) {
        rep.covered = false;
        rep.witness = word_of(f);
        return rep;
      }
    }
  }
  rep.covered = true;
  return rep;
}

ModuloRecurrenceReport modulo_recurrent_upto(const BiWordSpec& spec, Position K, std::size_t N,
                                             Position radius, const WorkCeiling& ceiling) {
  if (K < 1) throw PreconditionError("modulo_recurrent_upto needs K >= 1");
  LanguageSample sample =
      sample_language(spec, N, std::max<Position>(radius, static_cast<Position>(N)), ceiling);
  const Position R = std::max(radius, sample.radius);
  const Window W = R == sample.radius ? sample.window : window(spec, -R, R, ceiling);

  ModuloRecurrenceReport rep;
  rep.K = K;
  rep.N = N;
  rep.radius = R;
  for (Position k = 1; k <= K; ++k) {
    for (std::size_t n = 1; n <= N; ++n) {
      auto occ = residues_by_factor(W, n, k);
      for (std::string_view f : sorted_distinct(sample.window.content, n)) {
        const auto& r = occ.at(f);
        ModuloFailure fail;
        for (Position x = 0; x < k; ++x) {
          if (!r[static_cast<std::size_t>(x)]) fail.missing.push_back(x);
        }
        if (!fail.missing.empty()) {
          fail.k = k;
          fail.w = word_of(f);
          rep.failures.push_back(std::move(fail));
        }
      }
    }
  }
  rep.pass = rep.failures.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// Density budgets

DensityBudget::DensityBudget(Position base, std::vector<Position> jumps, Position tail_mul,
                             Position tail_add)
    : base_(base), jumps_(std::move(jumps)), mul_(tail_mul), add_(tail_add) {
  if (jumps_.empty()) throw PreconditionError("density budget needs at least one jump");
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (jumps_[i] < 0 || (i > 0 && jumps_[i] <= jumps_[i - 1])) {
      throw PreconditionError("density budget jumps must be non-negative and increasing");
    }
  }
  if (mul_ < 1 || add_ < 0 || mul_ * jumps_.back() + add_ <= jumps_.back()) {
    throw PreconditionError("density budget tail rule must strictly increase");
  }
}

DensityBudget DensityBudget::floor_log2() { return DensityBudget(1, {2}, 2, 2); }

std::vector<Position> DensityBudget::jumps_up_to(Position v) const {
  std::vector<Position> out;
  if (v <= base_) return out;
  const auto need = static_cast<std::size_t>(v - base_);
  out.assign(jumps_.begin(), jumps_.begin() + static_cast<std::ptrdiff_t>(std::min(need, jumps_.size())));
  constexpr Position kCap = std::numeric_limits<Position>::max() / 4;
  while (out.size() < need) {
    const Position prev = out.back();
    if (prev > (kCap - add_) / mul_) {
      throw ResourceError("density budget value " + std::to_string(v) +
                          " is only reached beyond 2^61");
    }
    out.push_back(mul_ * prev + add_);
  }
  return out;
}

Position DensityBudget::value(Position n) const {
  Position v = base_;
  Position j = 0;
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    j = jumps_[i];
    if (j > n) return v;
    ++v;
  }
  constexpr Position kCap = std::numeric_limits<Position>::max() / 4;
  while (true) {
    if (j > (kCap - add_) / mul_) return v;
    j = mul_ * j + add_;
    if (j > n) return v;
    ++v;
  }
}

Position DensityBudget::reach(Position v) const {
  if (v <= base_) return 0;
  return jumps_up_to(v).back();
}

// ---------------------------------------------------------------------------
// Sparse attractors

namespace {

struct FactorSample {
  std::vector<Word> order;
  Window window;
};

FactorSample recurrent_factors(const BiWordSpec& spec, std::size_t N, Position radius,
                               const WorkCeiling& ceiling) {
  LanguageSample sample =
      sample_language(spec, N, std::max<Position>(radius, static_cast<Position>(N)), ceiling);
  struct Tally {
    std::size_t total = 0, left = 0, right = 0;
    bool ok() const { return left >= 2 && right >= 2; }
  };
  // The radius doubles while some factor lacks occurrences on a side, up to a
  // fixed multiple of the sample radius.
  const Position limit = std::max({radius, 16 * sample.radius, Position{1024}});
  Position R = std::max(radius, sample.radius);
  FactorSample out;
  std::vector<Tally> tally;
  while (true) {
    out.window = R == sample.radius ? sample.window : window(spec, -R, R, ceiling);
    out.order.clear();
    tally.clear();
    for (std::size_t n = 1; n <= N; ++n) {
      for (std::string_view f : sorted_distinct(sample.window.content, n)) {
        Word w = word_of(f);
        Tally t;
        for (std::size_t s : occurrences(out.window.content, w)) {
          const Position p = out.window.first() + static_cast<Position>(s);
          ++t.total;
          if (p + static_cast<Position>(n) - 1 < 0) ++t.left;
          if (p > 0) ++t.right;
        }
        tally.push_back(t);
        out.order.push_back(std::move(w));
      }
    }
    if (std::all_of(tally.begin(), tally.end(), [](const Tally& t) { return t.ok(); })) return out;
    if (2 * R > limit) break;
    R *= 2;
  }
  // Single occurrences are reported before one-sided ones.
  for (std::size_t i = 0; i < tally.size(); ++i) {
    if (tally[i].total < 2) {
      throw PreconditionError("factor " + to_string(out.order[i]) +
                              " occurs once within radius " + std::to_string(R) +
                              "; no second admissible position (word not recurrent)");
    }
  }
  for (std::size_t i = 0; i < tally.size(); ++i) {
    if (!tally[i].ok()) {
      throw PreconditionError("factor " + to_string(out.order[i]) + " occurs " +
                              std::to_string(tally[i].left) + " times left and " +
                              std::to_string(tally[i].right) + " times right of 0 within radius " +
                              std::to_string(R) +
                              "; no admissible position far from 0 (word not recurrent)");
    }
  }
  return out;
}

// Smallest p >= D crossed by an occurrence of w (side = +1), or largest p <= -D
// (side = -1).
Position nearest_crossing(const BiWordSpec& spec, const Word& w, Position D, int side,
                          const WorkCeiling& ceiling) {
  const auto n = static_cast<Position>(w.size());
  Position span = 256;
  while (true) {
    if (span > ceiling.max_symbols) {
      throw ResourceError("no occurrence of " + to_string(w) + " within " +
                          std::to_string(ceiling.max_symbols) + " symbols of distance " +
                          std::to_string(D));
    }
    if (side > 0) {
      const Window W = window(spec, D - n + 1, D - n + span, ceiling);
      auto occ = occurrences(W.content, w);
      if (!occ.empty()) return std::max(W.first() + static_cast<Position>(occ.front()), D);
    } else {
      const Window W = window(spec, -D - span + n, -D + n - 1, ceiling);
      auto occ = occurrences(W.content, w);
      if (!occ.empty()) {
        return std::min(W.first() + static_cast<Position>(occ.back()) + n - 1, -D);
      }
    }
    span *= 2;
  }
}

void finish_report(SparseReport& rep, const BiWordSpec& spec, const DensityBudget& budget,
                   const WorkCeiling& ceiling) {
  // Density: the count only grows at |gamma| values, so checking there is exact.
  const auto pts = rep.gamma.positions();
  std::vector<Position> dist;
  for (Position p : pts) dist.push_back(p < 0 ? -p : p);
  std::sort(dist.begin(), dist.end());
  rep.density_ok = true;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (i + 1 < dist.size() && dist[i + 1] == dist[i]) continue;
    if (static_cast<Position>(i + 1) > budget.value(dist[i])) {
      rep.density_ok = false;
      rep.density_violation = dist[i];
      break;
    }
  }

  // Coverage around every element, independent of the construction.
  std::size_t longest = 0;
  for (const Word& f : rep.enumeration) longest = std::max(longest, f.size());
  const auto L = static_cast<Position>(longest);
  std::vector<Window> around;
  std::size_t a = 0;
  while (a < pts.size()) {
    std::size_t b = a;
    while (b + 1 < pts.size() && pts[b + 1] - pts[b] <= 2 * L) ++b;
    around.push_back(window(spec, pts[a] - L + 1, pts[b] + L - 1, ceiling));
    a = b + 1;
  }
  rep.coverage_ok = true;
  for (const Word& f : rep.enumeration) {
    bool hit = false;
    for (const Window& W : around) {
      const auto n = static_cast<Position>(f.size());
      for (std::size_t t : occurrences(W.content, f)) {
        const Position p = W.first() + static_cast<Position>(t);
        if (rep.gamma.meets(p, p + n - 1)) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (!hit) {
      rep.coverage_ok = false;
      rep.uncovered = f;
      return;
    }
  }
}

}  // namespace

SparseReport sparse_attractor(const BiWordSpec& spec, const DensityBudget& budget, std::size_t N,
                              Position radius, const WorkCeiling& ceiling) {
  FactorSample fs = recurrent_factors(spec, N, radius, ceiling);
  SparseReport rep;
  rep.radius = fs.window.last();
  rep.enumeration = fs.order;
  for (std::size_t i = 1; i <= fs.order.size(); ++i) {
    const Position D = budget.reach(static_cast<Position>(i));
    const Word& f = fs.order[i - 1];
    const Position neg = nearest_crossing(spec, f, D, -1, ceiling);
    const Position pos = nearest_crossing(spec, f, D, +1, ceiling);
    rep.selected.push_back(-neg <= pos ? neg : pos);
  }
  rep.gamma = PositionSet::finite(rep.selected);
  finish_report(rep, spec, budget, ceiling);
  return rep;
}

SparseReport sparse_block_attractor(const BiWordSpec& spec, const DensityBudget& budget,
                                    std::size_t N, Position radius, const WorkCeiling& ceiling) {
  FactorSample fs = recurrent_factors(spec, N, radius, ceiling);
  SparseReport rep;
  rep.radius = fs.window.last();
  rep.enumeration = fs.order;
  std::size_t C = 0;
  for (const Word& f : fs.order) {
    rep.block_lengths.push_back(recurrence_constant(fs.window, f));
    C = std::max(C, rep.block_lengths.back());
  }
  // Block point number t+1 sits at gamma + t and needs eta(gamma + t) >= t + 1.
  Position gamma = 0;
  for (Position t = 0; t < static_cast<Position>(C); ++t) {
    gamma = std::max(gamma, budget.reach(t + 1) - t);
  }
  rep.selected.assign(fs.order.size(), gamma);
  rep.gamma = PositionSet::interval(gamma, gamma + static_cast<Position>(C) - 1);
  finish_report(rep, spec, budget, ceiling);
  return rep;
}

std::size_t recurrence_constant(const Window& win, WordView w) {
  const auto occ = occurrences(win.content, w);
  if (occ.empty()) {
    throw PreconditionError("word " + to_string(w) + " does not occur in window [" +
                            std::to_string(win.first()) + ", " + std::to_string(win.last()) + "]");
  }
  const auto n = static_cast<Position>(w.size());
  const auto last = static_cast<Position>(win.size()) - 1;
  Position c = std::max(n, static_cast<Position>(occ.front()) + n);
  for (std::size_t j = 0; j + 1 < occ.size(); ++j) {
    c = std::max(c, static_cast<Position>(occ[j + 1] - occ[j]) - 1 + n);
  }
  c = std::max(c, last - static_cast<Position>(occ.back()) + 1);
  return static_cast<std::size_t>(c);
}

std::size_t recurrence_constant(const BiWordSpec& spec, WordView w, Position radius,
                                const WorkCeiling& ceiling) {
  return recurrence_constant(window(spec, -radius, radius, ceiling), w);
}

// ---------------------------------------------------------------------------
// Sliding block codes

Window apply_sliding_block(const Window& input, const LocalRule& rule, Position i, Position j) {
  if (rule.M < 1) throw PreconditionError("local rule needs M >= 1");
  const auto M = static_cast<Position>(rule.M);
  if (!input.covers(i, j + M - 1)) {
    throw PreconditionError("sliding block needs input on [" + std::to_string(i) + ", " +
                            std::to_string(j + M - 1) + "]");
  }
  Window out{i, {}};
  out.content.reserve(static_cast<std::size_t>(j - i + 1));
  for (Position p = i; p <= j; ++p) {
    Word block = input.sub(p, p + M - 1);
    auto it = rule.table.find(block);
    if (it == rule.table.end()) {
      throw PreconditionError("local rule has no entry for block " + to_string(block));
    }
    out.content.push_back(it->second);
  }
  return out;
}

Window apply_sliding_block(const BiWordSpec& spec, const LocalRule& rule, Position i, Position j,
                           const WorkCeiling& ceiling) {
  return apply_sliding_block(
      window(spec, i, j + static_cast<Position>(rule.M) - 1, ceiling), rule, i, j);
}

std::optional<PeriodizingRule> periodizing_rule(const BiWordSpec& spec, WordView w, Position k,
                                                Position radius, const WorkCeiling& ceiling) {
  PeriodizingRule out;
  out.occurrences = occ_mod(spec, w, k, radius, ceiling);
  if (out.occurrences.residues.empty() || out.occurrences.full()) return std::nullopt;
  out.radius = radius;

  const Window W = window(spec, -radius, radius, ceiling);
  const auto occ = occurrences(W.content, w);
  Position far = 0;
  for (Position r : out.occurrences.residues) {
    std::optional<Position> best;
    for (std::size_t t : occ) {
      const Position p = W.first() + static_cast<Position>(t);
      if (mod(p, k) != r) continue;
      if (!best || std::abs(p) < std::abs(*best) || (std::abs(p) == std::abs(*best) && p < *best)) {
        best = p;
      }
    }
    out.representatives.push_back(*best);
    far = std::max(far, std::abs(*best));
  }
  out.N = static_cast<Position>(w.size()) + far;
  out.u = W.sub(-out.N, out.N);
  const std::size_t M = recurrence_constant(W, out.u);
  out.rule.M = M;

  const auto wl = static_cast<Position>(w.size());
  const auto Ml = static_cast<Position>(M);
  for (Position p = W.first(); p + Ml - 1 <= W.last(); ++p) {
    Word block = W.sub(p, p + Ml - 1);
    if (out.rule.table.count(block)) continue;
    Letter value = 0;
    for (Position j = 0; j + wl <= Ml; j += k) {
      if (std::equal(w.begin(), w.end(), block.begin() + j)) {
        value = 1;
        break;
      }
    }
    out.rule.table.emplace(std::move(block), value);
  }
  return out;
}

}  // namespace strattr
