#include "strattr/biword.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "strattr/error.hpp"

namespace strattr {

// ---------------------------------------------------------------------------
// Window

Letter Window::at(Position p) const {
  if (p < first() || p > last()) {
    throw PreconditionError("position " + std::to_string(p) + " outside window [" +
                            std::to_string(first()) + ", " + std::to_string(last()) +
                            "]");
  }
  return content[static_cast<std::size_t>(p - offset)];
}

WordView Window::view(Position i, Position j) const {
  if (i > j + 1 || i < first() || j > last()) {
    throw PreconditionError("range [" + std::to_string(i) + ", " + std::to_string(j) +
                            "] outside window [" + std::to_string(first()) + ", " +
                            std::to_string(last()) + "]");
  }
  return WordView(content).subspan(static_cast<std::size_t>(i - offset),
                                   static_cast<std::size_t>(j - i + 1));
}

Word Window::sub(Position i, Position j) const {
  auto v = view(i, j);
  return Word(v.begin(), v.end());
}

const char* to_string(Variant v) { return v == Variant::upper ? "upper" : "lower"; }

// ---------------------------------------------------------------------------
// DirectiveSequence

DirectiveSequence::DirectiveSequence(Word head, Word tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
  for (const Word* w : {&head_, &tail_}) {
    for (Letter a : *w) {
      if (a > 1) throw PreconditionError("directive letters must be 0 or 1");
    }
  }
  if (tail_.empty()) throw PreconditionError("directive tail is empty");
  bool has0 = std::count(tail_.begin(), tail_.end(), Letter{0}) > 0;
  bool has1 = std::count(tail_.begin(), tail_.end(), Letter{1}) > 0;
  if (!has0 || !has1) {
    throw PreconditionError("directive tail must contain both 0 and 1 (got tail " +
                            to_string(tail_) + ")");
  }
}

Letter DirectiveSequence::at(std::size_t i) const {
  if (i < head_.size()) return head_[i];
  return tail_[(i - head_.size()) % tail_.size()];
}

DirectiveSequence DirectiveSequence::drop_first() const {
  if (!head_.empty()) return {Word(head_.begin() + 1, head_.end()), tail_};
  Word t(tail_.begin() + 1, tail_.end());
  t.push_back(tail_.front());
  return {Word{}, t};
}

// ---------------------------------------------------------------------------
// Lazy expansion of the limit word l = lim common prefix of s_i(0), s_i(1),
// s_i = L_{a_0} ... L_{a_i}.

namespace detail {

class CharacteristicExpansion {
 public:
  explicit CharacteristicExpansion(const DirectiveSequence& d) {
    constexpr std::int64_t kMaterialize = std::int64_t{1} << 18;
    constexpr std::int64_t kLengthCap = std::int64_t{1} << 61;
    constexpr std::size_t kMaxSteps = 1 << 16;
    std::int64_t len0 = 1, len1 = 1;
    img0_ = {0};
    img1_ = {1};
    for (std::size_t i = 0; i < kMaxSteps; ++i) {
      Step s;
      s.a = d.at(i);
      if (s.a == 0) {
        s.cp = len0;
        s.len0 = len0;
        s.len1 = len0 + len1;
      } else {
        s.cp = len1;
        s.len0 = len1 + len0;
        s.len1 = len1;
      }
      steps_.push_back(s);
      if (s.len0 <= kMaterialize && s.len1 <= kMaterialize) {
        if (s.a == 0) {
          img1_.insert(img1_.begin(), img0_.begin(), img0_.end());
        } else {
          img0_.insert(img0_.begin(), img1_.begin(), img1_.end());
        }
        mat_ = i;
      }
      len0 = s.len0;
      len1 = s.len1;
      if (std::max(len0, len1) > kLengthCap) break;
    }
    reach_ = steps_.back().cp;
    mat_cp_ = steps_[mat_].cp;
  }

  std::int64_t reach() const { return reach_; }

  // l[t], 0-based.
  Letter limit_letter(std::int64_t t) const {
    if (t < mat_cp_) return img0_[static_cast<std::size_t>(t)];
    if (t >= reach_) {
      throw ResourceError("limit word index " + std::to_string(t) +
                          " beyond expansion reach " + std::to_string(reach_));
    }
    std::size_t i = mat_ + 1;
    while (steps_[i].cp <= t) ++i;
    Letter c = 0;
    while (i > mat_) {
      const Step& prev = steps_[i - 1];
      if (steps_[i].a == 0) {
        if (c == 1) {
          if (t < prev.len0) c = 0;
          else t -= prev.len0;
        }
      } else {
        if (c == 0) {
          if (t < prev.len1) c = 1;
          else t -= prev.len1;
        }
      }
      --i;
    }
    return c == 0 ? img0_[static_cast<std::size_t>(t)] : img1_[static_cast<std::size_t>(t)];
  }

 private:
  struct Step {
    Letter a = 0;
    std::int64_t len0 = 0, len1 = 0, cp = 0;
  };
  std::vector<Step> steps_;
  std::size_t mat_ = 0;
  Word img0_, img1_;
  std::int64_t mat_cp_ = 0;
  std::int64_t reach_ = 0;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// BiWordSpec

Letter EventuallyPeriodic::at(Position n) const {
  const auto c = static_cast<Position>(center.size());
  if (n >= 0 && n < c) return center[static_cast<std::size_t>(n)];
  if (n >= c) {
    return right[static_cast<std::size_t>((n - c) % static_cast<Position>(right.size()))];
  }
  const Position t = -1 - n;
  const auto u = static_cast<Position>(left.size());
  return left[static_cast<std::size_t>(u - 1 - t % u)];
}

BiWordSpec BiWordSpec::eventually_periodic(Word left, Word center, Word right) {
  if (left.empty() || right.empty()) {
    throw PreconditionError("eventually periodic spec needs nonempty left and right periods");
  }
  return BiWordSpec(EventuallyPeriodic{std::move(left), std::move(center), std::move(right)});
}

BiWordSpec BiWordSpec::characteristic(DirectiveSequence directive, Variant variant) {
  auto expansion = std::make_shared<const detail::CharacteristicExpansion>(directive);
  return BiWordSpec(CharacteristicSturmian{std::move(directive), variant, std::move(expansion)});
}

BiWordSpec BiWordSpec::shifted(const BiWordSpec& inner, Position m) {
  return BiWordSpec(Shifted{std::make_shared<const BiWordSpec>(inner), m});
}

BiWordSpec BiWordSpec::image(const BiWordSpec& inner, Substitution phi, Position residue) {
  if (phi.rules().empty()) throw PreconditionError("image under an empty substitution");
  if (residue < 0) throw PreconditionError("image residue must be non-negative");
  if (inner.window_computable()) {
    const Letter x0 = window(inner, 0, 0).content[0];
    const auto len = static_cast<Position>(phi.image(x0).size());
    if (residue >= len) {
      throw PreconditionError("image residue " + std::to_string(residue) +
                              " not below |phi(x_0)| = " + std::to_string(len));
    }
  }
  return BiWordSpec(MorphicImage{std::make_shared<const BiWordSpec>(inner), std::move(phi), residue});
}

BiWordSpec BiWordSpec::orbit_point(const BiWordSpec& inner) {
  return BiWordSpec(OrbitPoint{std::make_shared<const BiWordSpec>(inner)});
}

bool BiWordSpec::window_computable() const {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, OrbitPoint>) {
          return false;
        } else if constexpr (std::is_same_v<T, Shifted> || std::is_same_v<T, MorphicImage>) {
          return n.inner->window_computable();
        } else {
          return true;
        }
      },
      node());
}

bool operator==(const BiWordSpec& a, const BiWordSpec& b) {
  if (a.node().index() != b.node().index()) return false;
  if (auto* x = a.as<EventuallyPeriodic>()) return *x == *b.as<EventuallyPeriodic>();
  if (auto* x = a.as<CharacteristicSturmian>()) {
    auto* y = b.as<CharacteristicSturmian>();
    return x->directive == y->directive && x->variant == y->variant;
  }
  if (auto* x = a.as<Shifted>()) {
    auto* y = b.as<Shifted>();
    return x->m == y->m && *x->inner == *y->inner;
  }
  if (auto* x = a.as<MorphicImage>()) {
    auto* y = b.as<MorphicImage>();
    return x->residue == y->residue && x->phi == y->phi && *x->inner == *y->inner;
  }
  return *a.as<OrbitPoint>()->inner == *b.as<OrbitPoint>()->inner;
}

const BiWordSpec& language_source(const BiWordSpec& spec) {
  if (auto* o = spec.as<OrbitPoint>()) return language_source(*o->inner);
  return spec;
}

// ---------------------------------------------------------------------------
// Windows

namespace {

Letter char_letter(const CharacteristicSturmian& cs, Position p) {
  if (p == 0) return cs.variant == Variant::upper ? 0 : 1;
  if (p == 1) return cs.variant == Variant::upper ? 1 : 0;
  if (p >= 2) return cs.expansion->limit_letter(p - 2);
  return cs.expansion->limit_letter(-p - 1);
}

Word window_word(const BiWordSpec& spec, Position i, Position j, const WorkCeiling& ceiling);

Word image_window(const MorphicImage& mi, Position i, Position j, const WorkCeiling& ceiling) {
  const Position I = i + mi.residue;
  const Position J = j + mi.residue;
  Word out;
  out.reserve(static_cast<std::size_t>(j - i + 1));
  std::int64_t fetched = 0;
  auto charge = [&](std::int64_t n) {
    fetched += n;
    if (fetched > ceiling.max_symbols) {
      throw ResourceError("morphic image window needs more than " +
                          std::to_string(ceiling.max_symbols) +
                          " inner symbols (work ceiling max_symbols)");
    }
  };

  if (I < 0) {
    // phi(y_[a, -1]) occupies [-L, -1]; grow a leftwards until L >= -I.
    std::vector<Word> chunks;
    Position need = -I, have = 0, next = -1, chunk = 64;
    while (have < need) {
      charge(chunk);
      Word part = window_word(*mi.inner, next - chunk + 1, next, ceiling);
      for (Letter a : part) have += static_cast<Position>(mi.phi.image(a).size());
      chunks.push_back(std::move(part));
      next -= chunk;
      chunk *= 2;
    }
    Word expanded;
    for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) {
      Word img = mi.phi.apply(*it);
      expanded.insert(expanded.end(), img.begin(), img.end());
    }
    // expanded covers [-have, -1].
    const Position hi = std::min<Position>(J, -1);
    const Position base = -have;
    out.insert(out.end(), expanded.begin() + (I - base), expanded.begin() + (hi - base + 1));
  }
  if (J >= 0) {
    Word expanded;
    Position next = 0, chunk = 64;
    while (static_cast<Position>(expanded.size()) <= J) {
      charge(chunk);
      Word part = window_word(*mi.inner, next, next + chunk - 1, ceiling);
      Word img = mi.phi.apply(part);
      expanded.insert(expanded.end(), img.begin(), img.end());
      next += chunk;
      chunk *= 2;
    }
    const Position lo = std::max<Position>(I, 0);
    out.insert(out.end(), expanded.begin() + lo, expanded.begin() + J + 1);
  }
  return out;
}

Word window_word(const BiWordSpec& spec, Position i, Position j, const WorkCeiling& ceiling) {
  if (auto* ep = spec.as<EventuallyPeriodic>()) {
    Word out;
    out.reserve(static_cast<std::size_t>(j - i + 1));
    for (Position p = i; p <= j; ++p) out.push_back(ep->at(p));
    return out;
  }
  if (auto* cs = spec.as<CharacteristicSturmian>()) {
    Word out;
    out.reserve(static_cast<std::size_t>(j - i + 1));
    for (Position p = i; p <= j; ++p) out.push_back(char_letter(*cs, p));
    return out;
  }
  if (auto* sh = spec.as<Shifted>()) {
    return window_word(*sh->inner, i + sh->m, j + sh->m, ceiling);
  }
  if (auto* mi = spec.as<MorphicImage>()) return image_window(*mi, i, j, ceiling);
  throw SymbolicError(
      "declared orbit point has no window oracle; only its language is available");
}

}  // namespace

Window window(const BiWordSpec& spec, Position i, Position j, const WorkCeiling& ceiling) {
  if (i > j) {
    throw PreconditionError("window needs i <= j, got [" + std::to_string(i) + ", " +
                            std::to_string(j) + "]");
  }
  if (j - i + 1 > ceiling.max_symbols) {
    throw ResourceError("window of length " + std::to_string(j - i + 1) +
                        " exceeds work ceiling max_symbols = " +
                        std::to_string(ceiling.max_symbols));
  }
  return {i, window_word(spec, i, j, ceiling)};
}

Word left_special_prefix(const DirectiveSequence& d, std::size_t n, const WorkCeiling& ceiling) {
  if (static_cast<std::int64_t>(n) > ceiling.max_symbols) {
    throw ResourceError("prefix length " + std::to_string(n) +
                        " exceeds work ceiling max_symbols = " +
                        std::to_string(ceiling.max_symbols));
  }
  if (n == 0) return {};
  detail::CharacteristicExpansion ex(d);
  Word out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.push_back(ex.limit_letter(static_cast<std::int64_t>(t)));
  return out;
}

Window char_window(const DirectiveSequence& d, Variant variant, std::size_t n,
                   const WorkCeiling& ceiling) {
  Word l = left_special_prefix(d, n, ceiling);
  Word out = reversal(l);
  if (variant == Variant::upper) {
    out.push_back(0);
    out.push_back(1);
  } else {
    out.push_back(1);
    out.push_back(0);
  }
  out.insert(out.end(), l.begin(), l.end());
  return {-static_cast<Position>(n), std::move(out)};
}

// ---------------------------------------------------------------------------
// Eventually periodic structure

std::optional<ReducedPeriodic> reduce_to_eventually_periodic(const BiWordSpec& spec) {
  if (auto* ep = spec.as<EventuallyPeriodic>()) return ReducedPeriodic{*ep, 0};
  if (auto* sh = spec.as<Shifted>()) {
    auto r = reduce_to_eventually_periodic(*sh->inner);
    if (!r) return std::nullopt;
    r->shift += sh->m;
    return r;
  }
  if (auto* mi = spec.as<MorphicImage>()) {
    auto r = reduce_to_eventually_periodic(*mi->inner);
    if (!r) return std::nullopt;
    const EventuallyPeriodic& e = r->base;
    Position t = 0;
    if (r->shift > 0) {
      for (Position s = 0; s < r->shift; ++s) t += static_cast<Position>(mi->phi.image(e.at(s)).size());
    } else {
      for (Position s = r->shift; s < 0; ++s) t -= static_cast<Position>(mi->phi.image(e.at(s)).size());
    }
    EventuallyPeriodic img{mi->phi.apply(e.left), mi->phi.apply(e.center), mi->phi.apply(e.right)};
    return ReducedPeriodic{std::move(img), t + mi->residue};
  }
  return std::nullopt;
}

Normalization normalize_eventually_periodic(const BiWordSpec& spec) {
  auto r = reduce_to_eventually_periodic(spec);
  if (!r) throw PreconditionError("spec is not eventually periodic");
  const EventuallyPeriodic& e = r->base;
  const auto p = static_cast<Position>(primitive_root(e.right).size());
  const auto q = static_cast<Position>(primitive_root(e.left).size());
  const auto c = static_cast<Position>(e.center.size());

  std::optional<Position> fail_right;
  for (Position n = c - 1; n >= -2 * (p + q); --n) {
    if (e.at(n) != e.at(n + p)) {
      fail_right = n;
      break;
    }
  }
  if (!fail_right) return PurelyPeriodic{static_cast<std::size_t>(p)};

  std::optional<Position> fail_left;
  for (Position n = 0; n <= c + 2 * (p + q); ++n) {
    if (e.at(n) != e.at(n - q)) {
      fail_left = n;
      break;
    }
  }
  if (!fail_left) return PurelyPeriodic{static_cast<std::size_t>(q)};

  PeriodicStructure s;
  s.i = *fail_right + 1 - r->shift;
  s.p = static_cast<std::size_t>(p);
  s.j = *fail_left - 1 - r->shift;
  s.q = static_cast<std::size_t>(q);
  return s;
}

// ---------------------------------------------------------------------------
// Language sampling

namespace {

std::vector<std::size_t> count_factors(WordView w, std::size_t max_length) {
  std::vector<std::size_t> counts(max_length + 1, 0);
  counts[0] = 1;
  std::unordered_set<std::string_view> seen;
  for (std::size_t n = 1; n <= max_length && n <= w.size(); ++n) {
    seen.clear();
    for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(as_key(w.subspan(i, n)));
    counts[n] = seen.size();
  }
  return counts;
}

}  // namespace

FactorSet LanguageSample::factors(std::size_t n) const {
  if (n > max_length) {
    throw PreconditionError("sample covers lengths up to " + std::to_string(max_length) +
                            ", requested " + std::to_string(n));
  }
  return strattr::factors(window.content, n);
}

LanguageSample sample_language(const BiWordSpec& spec, std::size_t max_length,
                               Position start_radius, const WorkCeiling& ceiling) {
  const BiWordSpec& src = language_source(spec);
  Position R = std::max<Position>({start_radius, static_cast<Position>(max_length), 8});
  while (true) {
    if (4 * R > ceiling.max_radius) {
      throw ResourceError("factor counts up to length " + std::to_string(max_length) +
                          " did not stabilize within radius " +
                          std::to_string(ceiling.max_radius) + " (work ceiling max_radius)");
    }
    Window w = window(src, -4 * R, 4 * R, ceiling);
    auto c4 = count_factors(w.content, max_length);
    auto c2 = count_factors(w.view(-2 * R, 2 * R), max_length);
    auto c1 = count_factors(w.view(-R, R), max_length);
    if (c1 == c2 && c2 == c4) {
      LanguageSample s;
      s.radius = 4 * R;
      s.window = std::move(w);
      s.max_length = max_length;
      s.counts = std::move(c4);
      return s;
    }
    R *= 2;
  }
}

ComplexityProfile factor_complexity_profile(const BiWordSpec& spec, std::size_t N,
                                            Position radius, const WorkCeiling& ceiling) {
  if (radius < static_cast<Position>(N)) {
    throw PreconditionError("complexity profile needs radius >= N");
  }
  auto s = sample_language(spec, N, radius, ceiling);
  ComplexityProfile out;
  out.counts.assign(s.counts.begin() + 1, s.counts.end());
  out.radius = s.radius;
  return out;
}

}  // namespace strattr
