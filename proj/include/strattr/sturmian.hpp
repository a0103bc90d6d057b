#pragma once

// Span-one verification through the window law x_[-n, n+1] = r_n (01|10) l_n,
// descent of attractors along L0/L1 and span classification of Sturmian specs.

#include <optional>
#include <string>
#include <vector>

#include "strattr/attractor.hpp"
#include "strattr/biword.hpp"

namespace strattr {

struct Span1Report {
  std::size_t N = 0;
  Position radius = 0;
  bool pass = false;
  std::optional<Variant> variant;
  std::optional<std::size_t> first_failure;  // smallest n violating the law
  bool reversal_law = true;                  // r_n = reversal(l_n) for n <= N
  std::vector<Word> l;                       // l_0 .. l_N from the sample
  std::vector<Word> r;                       // r_0 .. r_N from the sample
  CoverageReport coverage;                   // [0, 1] at N
  bool consistent = false;                   // pass == coverage.covered
};

// Throws PreconditionError("not complexity n+1 at length n") when the sample
// is not Sturmian up to N + 1.
Span1Report verify_span1(const BiWordSpec& spec, std::size_t N, const WorkCeiling& ceiling = {});

struct DescentStep {
  int which = 0;        // peeled substitution L_which
  Position shift = 1;   // x = S^shift L_which(x')
  PositionSet gamma_before = PositionSet::interval(0, 0);
  PositionSet gamma_after = PositionSet::interval(0, 0);
  bool stabilized = false;  // equal spans; x at gamma matches 0^i 1 0^j or its swap
  Word pattern;             // x_[n, n+k] of L_which(x') at the shifted gamma
  bool validated = false;   // gamma_after checked at N on x'
};

struct DescentTrace {
  std::vector<DescentStep> steps;
  bool reached_span1 = false;
  bool budget_exhausted = false;
};

// spec: a characteristic Sturmian word, possibly shifted. Peels L_{a_0},
// L_{a_1}, ... off the directive. A span increase throws InvariantViolation.
DescentTrace descend(const BiWordSpec& spec, const PositionSet& gamma, std::size_t N,
                     std::size_t budget = 64, const WorkCeiling& ceiling = {});

// Moves an interval attractor of char(d shifted `depth` times) to one of
// char(d) through x = S L_a(x').
PositionSet push_forward_attractor(const DirectiveSequence& d, Variant variant,
                                   const PositionSet& gamma, std::size_t depth,
                                   const WorkCeiling& ceiling = {});

// Finite(1) with a window-verified witness for shifted characteristic words,
// Infinite for declared orbit points, UnknownUpTo(N) when no span-one interval
// is found near 0. Non-Sturmian samples throw PreconditionError.
SpanResult classify_sturmian_span(const BiWordSpec& spec, std::size_t N = 40,
                                  const WorkCeiling& ceiling = {});

struct ImageCheckReport {
  Span1Report report;
  Variant expected = Variant::upper;
  bool pass = false;
};

// S L_a(spec) must again satisfy the window law with the same variant.
ImageCheckReport characteristic_image_check(const BiWordSpec& spec, int a, std::size_t N,
                                            const WorkCeiling& ceiling = {});

}  // namespace strattr
