#include "strattr/attractor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "strattr/error.hpp"

namespace strattr {

// ---------------------------------------------------------------------------
// PositionSet

PositionSet PositionSet::finite(std::vector<Position> positions) {
  if (positions.empty()) throw PreconditionError("finite position set is empty");
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  return PositionSet(Kind::finite, std::move(positions), 0, 0);
}

PositionSet PositionSet::interval(Position lo, Position hi) {
  if (lo > hi) {
    throw PreconditionError("interval needs lo <= hi, got [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }
  return PositionSet(Kind::interval, {}, lo, hi);
}

PositionSet PositionSet::progression(Position residue, Position modulus) {
  if (modulus < 1) throw PreconditionError("progression modulus must be >= 1");
  Position r = ((residue % modulus) + modulus) % modulus;
  return PositionSet(Kind::progression, {}, r, modulus);
}

Position PositionSet::min() const {
  if (kind_ == Kind::finite) return points_.front();
  if (kind_ == Kind::interval) return a_;
  throw PreconditionError("progression has no minimum");
}

Position PositionSet::max() const {
  if (kind_ == Kind::finite) return points_.back();
  if (kind_ == Kind::interval) return b_;
  throw PreconditionError("progression has no maximum");
}

std::vector<Position> PositionSet::positions() const {
  if (kind_ == Kind::finite) return points_;
  if (kind_ == Kind::interval) {
    std::vector<Position> out;
    for (Position p = a_; p <= b_; ++p) out.push_back(p);
    return out;
  }
  throw PreconditionError("progression is not enumerable");
}

bool PositionSet::contains(Position p) const {
  switch (kind_) {
    case Kind::finite:
      return std::binary_search(points_.begin(), points_.end(), p);
    case Kind::interval:
      return p >= a_ && p <= b_;
    case Kind::progression:
      return ((p - a_) % b_ + b_) % b_ == 0;
  }
  return false;
}

bool PositionSet::meets(Position lo, Position hi) const {
  if (lo > hi) return false;
  switch (kind_) {
    case Kind::finite: {
      auto it = std::lower_bound(points_.begin(), points_.end(), lo);
      return it != points_.end() && *it <= hi;
    }
    case Kind::interval:
      return lo <= b_ && hi >= a_;
    case Kind::progression:
      return hi - lo + 1 >= b_ || ((a_ - lo) % b_ + b_) % b_ <= hi - lo;
  }
  return false;
}

bool PositionSet::same_elements(const PositionSet& other) const {
  if (!bounded() || !other.bounded()) return *this == other;
  return positions() == other.positions();
}

std::string PositionSet::describe() const {
  switch (kind_) {
    case Kind::interval:
      return "[" + std::to_string(a_) + ", " + std::to_string(b_) + "]";
    case Kind::progression:
      return std::to_string(a_) + " + " + std::to_string(b_) + "Z";
    case Kind::finite: {
      std::string s = "{";
      for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(points_[i]);
      }
      return s + "}";
    }
  }
  return {};
}

SpanResult SpanResult::finite(Position value, PositionSet gamma, std::size_t N) {
  SpanResult r;
  r.kind = Kind::finite;
  r.value = value;
  r.attractor = std::move(gamma);
  r.provenance = "window-verified";
  r.N = N;
  return r;
}

SpanResult SpanResult::infinite(std::string reason) {
  SpanResult r;
  r.kind = Kind::infinite;
  r.reason = std::move(reason);
  r.provenance = "theorem-derived";
  return r;
}

SpanResult SpanResult::unknown_up_to(std::size_t N) {
  SpanResult r;
  r.kind = Kind::unknown;
  r.N = N;
  r.provenance = "window-verified";
  return r;
}

// ---------------------------------------------------------------------------
// Coverage

bool is_covered(const Window& win, const PositionSet& gamma, WordView w) {
  if (w.empty()) throw PreconditionError("coverage of the empty word is undefined");
  const auto n = static_cast<Position>(w.size());
  Position lo = win.first(), hi = win.last() - n + 1;
  if (gamma.bounded()) {
    const Position need_lo = gamma.min() - n + 1, need_hi = gamma.max() + n - 1;
    if (!win.covers(need_lo, need_hi)) {
      throw PreconditionError("coverage check needs window [" + std::to_string(need_lo) + ", " +
                              std::to_string(need_hi) + "], got [" +
                              std::to_string(win.first()) + ", " + std::to_string(win.last()) +
                              "]");
    }
    lo = need_lo;
    hi = gamma.max();
  }
  for (Position t = lo; t <= hi; ++t) {
    if (!gamma.meets(t, t + n - 1)) continue;
    auto v = win.view(t, t + n - 1);
    if (std::equal(v.begin(), v.end(), w.begin())) return true;
  }
  return false;
}

std::optional<Word> finite_uncovered(WordView w, const PositionSet& gamma) {
  const auto len = static_cast<Position>(w.size());
  for (Position n = 1; n <= len; ++n) {
    std::set<Word> all, covered;
    for (Position t = 0; t + n <= len; ++t) {
      Word f = slice(w, static_cast<std::size_t>(t), static_cast<std::size_t>(n));
      if (gamma.meets(t, t + n - 1)) covered.insert(f);
      all.insert(std::move(f));
    }
    for (const Word& f : all) {
      if (!covered.count(f)) return f;
    }
  }
  return std::nullopt;
}

namespace {

// Distinct length-n factors of a window, as views into it.
std::vector<std::string_view> distinct_factors(WordView w, std::size_t n) {
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(as_key(w.subspan(i, n)));
  std::vector<std::string_view> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Word word_of(std::string_view key) {
  return Word(reinterpret_cast<const Letter*>(key.data()),
              reinterpret_cast<const Letter*>(key.data()) + key.size());
}

}  // namespace

CoverageReport check_attractor(const BiWordSpec& spec, const PositionSet& gamma, std::size_t N,
                               Position start_radius, const WorkCeiling& ceiling) {
  if (N < 1) throw PreconditionError("check_attractor needs N >= 1");
  if (!spec.window_computable()) {
    throw SymbolicError("coverage of a declared orbit point is not window-checkable");
  }
  const auto n_max = static_cast<Position>(N);
  if (start_radius <= 0) start_radius = n_max;
  LanguageSample sample = sample_language(spec, N, start_radius, ceiling);

  // Windows holding every occurrence that could cross gamma.
  std::vector<Window> pieces;
  if (gamma.kind() == PositionSet::Kind::interval) {
    pieces.push_back(window(spec, gamma.min() - n_max + 1, gamma.max() + n_max - 1, ceiling));
  } else if (gamma.bounded()) {
    const std::vector<Position> pts = gamma.positions();
    std::size_t a = 0;
    while (a < pts.size()) {
      std::size_t b = a;
      while (b + 1 < pts.size() && pts[b + 1] - pts[b] <= 2 * n_max) ++b;
      pieces.push_back(window(spec, pts[a] - n_max + 1, pts[b] + n_max - 1, ceiling));
      a = b + 1;
    }
  } else {
    pieces.push_back(sample.window);
  }

  CoverageReport report;
  report.N = N;
  report.radius = sample.radius;
  report.gamma = gamma;
  for (std::size_t n = 1; n <= N; ++n) {
    const auto len = static_cast<Position>(n);
    std::unordered_set<std::string_view> crossing;
    for (const Window& piece : pieces) {
      for (Position t = piece.first(); t + len - 1 <= piece.last(); ++t) {
        if (gamma.meets(t, t + len - 1)) crossing.insert(as_key(piece.view(t, t + len - 1)));
      }
    }
    for (std::string_view f : distinct_factors(sample.window.content, n)) {
      if (!crossing.count(f)) {
        report.covered = false;
        report.witness = word_of(f);
        return report;
      }
    }
  }
  report.covered = true;
  return report;
}

// ---------------------------------------------------------------------------
// Brute-force minimal span

SpanResult min_span_bruteforce(const BiWordSpec& spec, std::size_t N, Position search,
                               std::optional<Position> max_span, const WorkCeiling& ceiling) {
  if (search < static_cast<Position>(N)) {
    throw PreconditionError("min_span_bruteforce needs search >= N");
  }
  const Position kmax = max_span.value_or(search);
  const auto n_max = static_cast<Position>(N);
  LanguageSample sample = sample_language(spec, N, n_max, ceiling);
  const Window W = window(spec, -search - n_max, search + kmax + n_max, ceiling);

  struct Target {
    Position length;
    std::vector<Position> starts;
  };
  std::vector<Target> targets;
  for (std::size_t n = 1; n <= N; ++n) {
    const auto len = static_cast<Position>(n);
    std::unordered_map<std::string_view, std::vector<Position>> occ;
    for (Position t = W.first(); t + len - 1 <= W.last(); ++t) {
      occ[as_key(W.view(t, t + len - 1))].push_back(t);
    }
    for (std::string_view f : distinct_factors(sample.window.content, n)) {
      auto it = occ.find(f);
      if (it == occ.end()) return SpanResult::unknown_up_to(N);
      targets.push_back({len, std::move(it->second)});
    }
  }

  std::size_t hint = 0;
  auto passes = [&](Position a, Position b) {
    auto covers = [&](const Target& tg) {
      auto it = std::lower_bound(tg.starts.begin(), tg.starts.end(), a - tg.length + 1);
      return it != tg.starts.end() && *it <= b;
    };
    if (!covers(targets[hint])) return false;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!covers(targets[t])) {
        hint = t;
        return false;
      }
    }
    return true;
  };

  for (Position k = 0; k <= kmax; ++k) {
    for (Position step = 0; step <= 2 * search; ++step) {
      // 0, -1, 1, -2, 2, ...
      const Position a = (step % 2 == 1) ? -(step + 1) / 2 : step / 2;
      if (passes(a, a + k)) return SpanResult::finite(k, PositionSet::interval(a, a + k), N);
    }
  }
  return SpanResult::unknown_up_to(N);
}

// ---------------------------------------------------------------------------
// Brute-force minimal size (finite words)

MinSizeResult min_size_bruteforce(WordView w, std::size_t bound) {
  if (w.size() > bound) {
    throw ResourceError("word length " + std::to_string(w.size()) +
                        " exceeds exhaustive bound " + std::to_string(bound));
  }
  if (w.empty()) return {};
  const std::size_t len = w.size();
  std::map<Word, std::uint64_t> masks;
  for (std::size_t n = 1; n <= len; ++n) {
    for (std::size_t t = 0; t + n <= len; ++t) {
      std::uint64_t m = ((std::uint64_t{1} << n) - 1) << t;
      masks[slice(w, t, n)] |= m;
    }
  }
  std::vector<std::uint64_t> need;
  for (const auto& kv : masks) need.push_back(kv.second);

  for (std::size_t size = 1; size <= len; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::uint64_t g = 0;
      for (std::size_t i : idx) g |= std::uint64_t{1} << i;
      bool ok = std::all_of(need.begin(), need.end(), [g](std::uint64_t m) { return (m & g) != 0; });
      if (ok) {
        MinSizeResult r;
        r.size = size;
        for (std::size_t i : idx) r.positions.push_back(static_cast<Position>(i));
        return r;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == len - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InvariantViolation("no covering subset found, not even the full position set");
}

// ---------------------------------------------------------------------------
// Periodic constructions

DoublyPeriodicResult doubly_periodic_attractor(WordView w, std::size_t p, std::size_t q) {
  const std::size_t len = w.size();
  if (p == q) throw PreconditionError("need p != q");
  if (p == 0 || q == 0) throw PreconditionError("periods must be positive");
  if (p > len) throw PreconditionError("need p <= |w|");
  if (q > len) throw PreconditionError("need q <= |w|");
  if (len >= p + q) throw PreconditionError("need |w| < p + q");
  auto per = periods(w);
  if (!std::count(per.begin(), per.end(), p)) {
    throw PreconditionError("p = " + std::to_string(p) + " is not a period of w");
  }
  if (!std::count(per.begin(), per.end(), q)) {
    throw PreconditionError("q = " + std::to_string(q) + " is not a period of w");
  }
  DoublyPeriodicResult r;
  r.gamma = PositionSet::interval(static_cast<Position>(len) - static_cast<Position>(q),
                                  static_cast<Position>(p) - 1);
  r.witness = finite_uncovered(w, r.gamma);
  r.validated = !r.witness.has_value();
  return r;
}

std::size_t eventually_periodic_check_length(const BiWordSpec& spec) {
  auto reduced = reduce_to_eventually_periodic(spec);
  if (!reduced) throw PreconditionError("spec is not eventually periodic");
  const std::size_t p = primitive_root(reduced->base.right).size();
  const std::size_t q = primitive_root(reduced->base.left).size();
  return reduced->base.center.size() + 4 * (p + q);
}

PeriodicAttractor eventually_periodic_attractor(const BiWordSpec& spec,
                                                std::optional<std::size_t> N,
                                                const WorkCeiling& ceiling) {
  Normalization norm = normalize_eventually_periodic(spec);
  if (std::holds_alternative<PurelyPeriodic>(norm)) {
    throw PreconditionError("purely periodic: minimal span not covered by this construction");
  }
  PeriodicAttractor out;
  out.structure = std::get<PeriodicStructure>(norm);
  const auto& s = out.structure;
  const auto p = static_cast<Position>(s.p), q = static_cast<Position>(s.q);
  Word left_word = window(spec, s.j - q + 1, s.j, ceiling).content;
  Word right_word = window(spec, s.i, s.i + p - 1, ceiling).content;
  out.conjugate_periods = are_conjugate(left_word, right_word);
  if (out.conjugate_periods) {
    out.gamma = PositionSet::interval(s.j + 1, s.i + p - 1);
    out.span = s.i - s.j + p - 2;
  } else {
    out.gamma = PositionSet::interval(s.j - q + 1, s.i + p - 1);
    out.span = s.i - s.j + p + q - 2;
  }
  const std::size_t n = N.value_or(eventually_periodic_check_length(spec));
  out.validation = check_attractor(spec, out.gamma, n, 4 * static_cast<Position>(n), ceiling);
  return out;
}

ComplexityBoundReport complexity_span_consistency(const BiWordSpec& spec,
                                                  const PositionSet& gamma, std::size_t N,
                                                  const WorkCeiling& ceiling) {
  if (!gamma.bounded()) throw PreconditionError("complexity bound needs a bounded attractor");
  CoverageReport cov = check_attractor(spec, gamma, N, 0, ceiling);
  if (!cov.covered) {
    throw PreconditionError(gamma.describe() + " is not an attractor up to length " +
                            std::to_string(N) + " (witness " + to_string(*cov.witness) + ")");
  }
  ComplexityProfile prof = factor_complexity_profile(spec, N, static_cast<Position>(N), ceiling);
  ComplexityBoundReport r;
  r.profile = prof.counts;
  r.span = gamma.span();
  r.radius = prof.radius;
  r.equality = true;
  for (std::size_t n = 1; n <= N; ++n) {
    const auto bound = static_cast<Position>(n) + r.span;
    const auto pn = static_cast<Position>(prof.at(n));
    if (pn > bound) {
      throw InvariantViolation("p(" + std::to_string(n) + ") = " + std::to_string(pn) +
                               " exceeds n + span = " + std::to_string(bound));
    }
    if (pn != bound) r.equality = false;
  }
  return r;
}

}  // namespace strattr
