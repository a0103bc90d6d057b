#pragma once

// Substitutions acting on bi-infinite words and on their attractors.
//
// For x in A^Z, phi(x) places phi(x_0) at index 0. The support of x_i is
//   supp(i) = [cum(i), cum(i+1) - 1],
// where cum(i) = |phi(x_[0, i-1])| for i >= 0 and -|phi(x_[i, -1])| for i < 0.

#include <optional>
#include <string>
#include <utility>

#include "strattr/attractor.hpp"
#include "strattr/biword.hpp"
#include "strattr/morphism.hpp"

namespace strattr {

// phi(x) with residue 0.
BiWordSpec apply(const Substitution& phi, const BiWordSpec& spec);

// phi applied to a window that contains index 0 or ends at -1; the result is
// placed by the support formula.
Window apply(const Substitution& phi, const Window& win);

// Start of phi(x_i) in phi(x).
Position image_start(const BiWordSpec& spec, const Substitution& phi, Position i,
                     const WorkCeiling& ceiling = {});
std::pair<Position, Position> support(const BiWordSpec& spec, const Substitution& phi,
                                      Position i, const WorkCeiling& ceiling = {});

// Union of supp(i) over i in gamma.
PositionSet image_attractor(const BiWordSpec& spec, const Substitution& phi,
                            const PositionSet& gamma, const WorkCeiling& ceiling = {});

// Same, reading letters from a window that contains [min(gamma, 0), max(gamma, 0)].
PositionSet image_attractor(const Window& letters, const Substitution& phi,
                            const PositionSet& gamma);

// Letter positions i of spec with supp(i) meeting gamma.
PositionSet preimage_attractor(const BiWordSpec& spec, const Substitution& phi,
                               const PositionSet& gamma, const WorkCeiling& ceiling = {});

struct TrimResult {
  ReturnMorphismCertificate certificate;
  PositionSet image = PositionSet::interval(0, 0);    // image_attractor(gamma)
  PositionSet trimmed = PositionSet::interval(0, 0);  // without the |w| largest
  CoverageReport validation;                          // on phi(spec)
};

// Requires a valid return-morphism certificate for (phi, w) and a bounded gamma.
TrimResult trim_image_attractor(const BiWordSpec& spec, const Substitution& phi, WordView w,
                                const PositionSet& gamma, std::size_t N,
                                const WorkCeiling& ceiling = {});

struct LiftResult {
  ReturnMorphismCertificate certificate;
  PositionSet preimage = PositionSet::interval(0, 0);  // [m, m + l]
  PositionSet lifted = PositionSet::interval(0, 0);    // [m, m + l + |w|]
  CoverageReport validation;                           // on spec
};

// gamma is an interval attractor of phi(spec).
LiftResult lift_attractor_return(const BiWordSpec& spec, const Substitution& phi, WordView w,
                                 const PositionSet& gamma, std::size_t N,
                                 const WorkCeiling& ceiling = {});

struct DesubstitutionResult {
  int which = 0;
  Position m = 0;
  Position ell = 0;
  PositionSet preimage = PositionSet::interval(0, 0);
  bool removed_left = false;   // position m - 1
  bool removed_right = false;  // position m + ell
  std::string left_reason;
  std::string right_reason;
  bool swapped_rules = false;  // which == 1: rules with 0 and 1 exchanged
  PositionSet result = PositionSet::interval(0, 0);
  CoverageReport validation;   // on y
};

// gamma = [n, n + k] is an attractor of x = L_which(y).
DesubstitutionResult desubstitute_L(const BiWordSpec& y, int which, const PositionSet& gamma,
                                    std::size_t N, const WorkCeiling& ceiling = {});

}  // namespace strattr
