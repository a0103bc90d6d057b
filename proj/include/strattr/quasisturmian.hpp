#pragma once

// Quasi-Sturmian words: Rauzy graphs, bispecial factors, return-morphism
// extraction and span classification.
//
// Reports assume uniform recurrence of the sampled word; sampling cannot
// certify it.

#include <optional>
#include <string>
#include <vector>

#include "strattr/attractor.hpp"
#include "strattr/biword.hpp"
#include "strattr/morphism.hpp"

namespace strattr {

struct RauzyGraph {
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Letter label = 0;
  };
  std::size_t rank = 0;
  std::vector<Word> vertices;  // sorted
  std::vector<Edge> edges;     // sorted by (from, label)
  std::vector<std::size_t> out_degree;
  std::vector<std::size_t> in_degree;

  std::optional<std::size_t> index_of(const Word& u) const;
};

// Edges (u, a, v) for every ua = bv of sample_n1. Throws PreconditionError on
// inconsistent samples.
RauzyGraph build_rauzy(const FactorSet& sample_n, const FactorSet& sample_n1);

// Least n >= 1 with p(m+1) - p(m) = 1 for every sampled m >= n. Throws
// PreconditionError when the last increment of the profile is not 1.
std::size_t measure_n0(const ComplexityProfile& profile);

struct Bispecial {
  std::size_t n1 = 0;
  Word w;
};

// Smallest n1 >= n0 whose unique left-special factor is also right-special.
Bispecial find_bispecial(const BiWordSpec& spec, std::size_t n0, std::size_t N,
                         const WorkCeiling& ceiling = {});

struct ExtractionResult {
  Word w;
  std::size_t n1 = 0;
  Substitution phi;
  ReturnMorphismCertificate certificate;
  bool orientation_ok = false;  // a w is a suffix of w phi(a) for both letters
  bool swapped = false;         // loop naming was swapped to reach orientation_ok
  Position m = 0;               // x = S^m phi(y)
  Window inner;                 // y around 0
  Position k = 0;               // |phi(0)| + |phi(1)| - |w| - 1
  Position measured_offset = 0; // p(n) - n on the sampled profile
  bool k_matches = false;       // p(n) = n + k for every sampled n >= |w|
  Position radius = 0;          // x window used for decoding
};

// Throws PreconditionError("not quasi-Sturmian at this rank") unless the Rauzy
// graph of rank n1 is two loops through w.
ExtractionResult extract_return_morphism(const BiWordSpec& spec, std::size_t n1,
                                         std::size_t N = 40, const WorkCeiling& ceiling = {});

struct DesubstitutionReport {
  bool round_trip = false;
  std::size_t N = 0;
  std::vector<std::size_t> inner_profile;  // p(1..N) on the inner window
  bool inner_complexity = false;           // n + 1
  bool inner_balanced = false;
  bool inner_aperiodic = false;            // profile strictly increasing
  bool sturmian() const { return inner_complexity && inner_balanced && inner_aperiodic; }
};

// Round trip S^m phi(inner) against the spec window (mismatch throws
// InvariantViolation) and Sturmian checks on the inner window up to N.
DesubstitutionReport desubstitute(const BiWordSpec& spec, const ExtractionResult& result,
                                  std::size_t N, const WorkCeiling& ceiling = {});

// Full pipeline: n0, bispecial, extraction. N bounds the sampled lengths.
ExtractionResult extract(const BiWordSpec& spec, std::size_t N = 40,
                         const WorkCeiling& ceiling = {});

struct QuasiSturmianSpan {
  SpanResult span;
  std::optional<ExtractionResult> extraction;
  std::optional<PositionSet> inner_attractor;  // [t, t+1] on the inner word
};

// Finite(k) with a trimmed-image witness validated at N, Infinite for declared
// orbit points. Non-quasi-Sturmian samples throw PreconditionError.
QuasiSturmianSpan classify_qs_span(const BiWordSpec& spec, std::size_t N = 60,
                                   const WorkCeiling& ceiling = {});

struct FiniteAttractorVerdict {
  enum class Kind { bi_eventually_periodic, characteristic_morphic_image, no_finite_attractor };
  Kind kind = Kind::no_finite_attractor;
  std::optional<Position> span;
  std::optional<PositionSet> attractor;
  std::optional<CoverageReport> validation;
  std::optional<bool> complexity_law;  // p(n) = n + span eventually; unset when not applicable
  std::string provenance;              // "window-verified" | "theorem-derived"
  std::string detail;
};

const char* to_string(FiniteAttractorVerdict::Kind k);

FiniteAttractorVerdict finite_attractor_classifier(const BiWordSpec& spec, std::size_t N = 60,
                                                   const WorkCeiling& ceiling = {});

}  // namespace strattr
