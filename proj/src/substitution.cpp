#include "strattr/substitution.hpp"

#include <algorithm>

#include "strattr/error.hpp"

namespace strattr {

namespace {

// cum(i) for i in [lo, hi + 1].
struct Cumulative {
  Position lo = 0;
  std::vector<Position> starts;

  Position at(Position i) const { return starts[static_cast<std::size_t>(i - lo)]; }
};

Cumulative cumulative_from(const Window& w, const Substitution& phi, Position lo, Position hi) {
  const Position a = w.first(), b = w.last();
  std::vector<Position> c(static_cast<std::size_t>(b - a + 2));
  auto slot = [&](Position i) -> Position& { return c[static_cast<std::size_t>(i - a)]; };
  slot(0) = 0;
  for (Position i = 0; i <= b; ++i) {
    slot(i + 1) = slot(i) + static_cast<Position>(phi.image(w.at(i)).size());
  }
  for (Position i = -1; i >= a; --i) {
    slot(i) = slot(i + 1) - static_cast<Position>(phi.image(w.at(i)).size());
  }
  Cumulative out;
  out.lo = lo;
  out.starts.assign(c.begin() + (lo - a), c.begin() + (hi + 1 - a) + 1);
  return out;
}

Cumulative cumulative(const BiWordSpec& spec, const Substitution& phi, Position lo, Position hi,
                      const WorkCeiling& ceiling) {
  const Position a = std::min<Position>(lo, 0);
  const Position b = std::max<Position>(hi, 0);
  return cumulative_from(window(spec, a, b, ceiling), phi, lo, hi);
}

void require_bounded(const PositionSet& gamma, const char* what) {
  if (!gamma.bounded()) throw PreconditionError(std::string(what) + " needs a bounded set");
}

}  // namespace

BiWordSpec apply(const Substitution& phi, const BiWordSpec& spec) {
  return BiWordSpec::image(spec, phi, 0);
}

Window apply(const Substitution& phi, const Window& win) {
  if (win.first() > 0 || win.last() < -1) {
    throw PreconditionError("window must contain index 0 or end at -1 to place its image");
  }
  if (win.last() == -1) {
    // The image ends right before index 0.
    Position len = static_cast<Position>(phi.image_length(win.content));
    return {-len, phi.apply(win.content)};
  }
  Cumulative c = cumulative_from(win, phi, win.first(), win.last());
  return {c.at(win.first()), phi.apply(win.content)};
}

Position image_start(const BiWordSpec& spec, const Substitution& phi, Position i,
                     const WorkCeiling& ceiling) {
  return cumulative(spec, phi, i, i, ceiling).at(i);
}

std::pair<Position, Position> support(const BiWordSpec& spec, const Substitution& phi,
                                      Position i, const WorkCeiling& ceiling) {
  Cumulative c = cumulative(spec, phi, i, i, ceiling);
  return {c.at(i), c.at(i + 1) - 1};
}

PositionSet image_attractor(const BiWordSpec& spec, const Substitution& phi,
                            const PositionSet& gamma, const WorkCeiling& ceiling) {
  require_bounded(gamma, "image_attractor");
  Cumulative c = cumulative(spec, phi, gamma.min(), gamma.max(), ceiling);
  std::vector<Position> out;
  for (Position i : gamma.positions()) {
    for (Position p = c.at(i); p < c.at(i + 1); ++p) out.push_back(p);
  }
  return PositionSet::finite(std::move(out));
}

PositionSet image_attractor(const Window& letters, const Substitution& phi,
                            const PositionSet& gamma) {
  require_bounded(gamma, "image_attractor");
  const Position lo = std::min<Position>(gamma.min(), 0);
  const Position hi = std::max<Position>(gamma.max(), 0);
  if (!letters.covers(lo, hi)) {
    throw PreconditionError("image_attractor needs letters on [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }
  Cumulative c = cumulative_from(letters.restrict(lo, hi), phi, gamma.min(), gamma.max());
  std::vector<Position> out;
  for (Position i : gamma.positions()) {
    for (Position p = c.at(i); p < c.at(i + 1); ++p) out.push_back(p);
  }
  return PositionSet::finite(std::move(out));
}

PositionSet preimage_attractor(const BiWordSpec& spec, const Substitution& phi,
                               const PositionSet& gamma, const WorkCeiling& ceiling) {
  require_bounded(gamma, "preimage_attractor");
  const Position lo = std::min<Position>(gamma.min(), 0);
  const Position hi = std::max<Position>(gamma.max(), 0);
  Cumulative c = cumulative(spec, phi, lo, hi, ceiling);
  std::vector<Position> out;
  for (Position i = lo; i <= hi; ++i) {
    if (gamma.meets(c.at(i), c.at(i + 1) - 1)) out.push_back(i);
  }
  return PositionSet::finite(std::move(out));
}

namespace {

void require_return(const ReturnMorphismCertificate& cert) {
  if (!cert.valid) {
    throw PreconditionError("phi is not a return morphism for w = " + to_string(cert.w));
  }
}

PositionSet as_interval_if_contiguous(const PositionSet& s) {
  auto pts = s.positions();
  if (pts.back() - pts.front() + 1 == static_cast<Position>(pts.size())) {
    return PositionSet::interval(pts.front(), pts.back());
  }
  return s;
}

}  // namespace

TrimResult trim_image_attractor(const BiWordSpec& spec, const Substitution& phi, WordView w,
                                const PositionSet& gamma, std::size_t N,
                                const WorkCeiling& ceiling) {
  TrimResult r;
  r.certificate = is_return_morphism(phi, w);
  require_return(r.certificate);
  r.image = image_attractor(spec, phi, gamma, ceiling);
  auto pts = r.image.positions();
  if (pts.size() <= w.size()) {
    throw PreconditionError("image of gamma has " + std::to_string(pts.size()) +
                            " positions, not more than |w| = " + std::to_string(w.size()) +
                            "; trimming would leave nothing");
  }
  pts.resize(pts.size() - w.size());
  r.trimmed = as_interval_if_contiguous(PositionSet::finite(pts));
  r.validation = check_attractor(apply(phi, spec), r.trimmed, N, 0, ceiling);
  return r;
}

LiftResult lift_attractor_return(const BiWordSpec& spec, const Substitution& phi, WordView w,
                                 const PositionSet& gamma, std::size_t N,
                                 const WorkCeiling& ceiling) {
  if (gamma.kind() != PositionSet::Kind::interval) {
    throw PreconditionError("lift_attractor_return needs an interval");
  }
  LiftResult r;
  r.certificate = is_return_morphism(phi, w);
  require_return(r.certificate);
  PositionSet pre = preimage_attractor(spec, phi, gamma, ceiling);
  r.preimage = PositionSet::interval(pre.min(), pre.max());
  r.lifted = PositionSet::interval(pre.min(), pre.max() + static_cast<Position>(w.size()));
  r.validation = check_attractor(spec, r.lifted, N, 0, ceiling);
  return r;
}

DesubstitutionResult desubstitute_L(const BiWordSpec& y, int which, const PositionSet& gamma,
                                    std::size_t N, const WorkCeiling& ceiling) {
  if (which != 0 && which != 1) throw PreconditionError("desubstitute_L needs which in {0, 1}");
  if (gamma.kind() != PositionSet::Kind::interval) {
    throw PreconditionError("desubstitute_L needs an interval");
  }
  const Substitution L = which == 0 ? Substitution::L0() : Substitution::L1();
  const BiWordSpec x = apply(L, y);
  const Position n = gamma.min(), k = gamma.span();
  const Letter same = which == 0 ? 0 : 1;   // first letter of both images
  const Letter other = which == 0 ? 1 : 0;  // never the first letter of an image

  DesubstitutionResult r;
  r.which = which;
  r.swapped_rules = which == 1;
  Window xs = window(x, n - 1, n + k + 1, ceiling);

  Position count = 0;
  for (Position p = n + 1; p <= n + k; ++p) count += xs.at(p) == other ? 1 : 0;
  const Position ell_formula = k - count;

  PositionSet pre = preimage_attractor(y, L, gamma, ceiling);
  r.m = pre.min();
  r.ell = pre.max() - pre.min();
  r.preimage = PositionSet::interval(pre.min(), pre.max());
  if (r.ell != ell_formula || static_cast<Position>(pre.positions().size()) != r.ell + 1) {
    throw InvariantViolation("preimage length formula mismatch: preimage " + pre.describe() +
                             " vs l = " + std::to_string(ell_formula));
  }

  const std::string name0 = std::string(1, letter_name(same)) + letter_name(same);
  const std::string name01 = std::string(1, letter_name(same)) + letter_name(other);
  const std::string left_pair = to_string(xs.sub(n - 1, n));
  const std::string right_pair = to_string(xs.sub(n + k, n + k + 1));
  r.removed_left = left_pair != name0;
  r.left_reason = "x[n-1]x[n] = " + left_pair + (r.removed_left ? " != " : " == ") + name0;
  r.removed_right = right_pair == name01;
  r.right_reason = "x[n+k]x[n+k+1] = " + right_pair + (r.removed_right ? " == " : " != ") + name01;

  Position lo = r.m - 1, hi = r.m + r.ell;
  if (r.removed_left) ++lo;
  if (r.removed_right) --hi;
  if (lo > hi) {
    throw PreconditionError("both removals apply to a single preimage position; the interval " +
                            gamma.describe() + " cannot be an attractor of x");
  }
  r.result = PositionSet::interval(lo, hi);
  r.validation = check_attractor(y, r.result, N, 0, ceiling);
  return r;
}

}  // namespace strattr
