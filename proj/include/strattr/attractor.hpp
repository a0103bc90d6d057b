#pragma once

// String attractors of bi-infinite words: coverage checks, spans, brute-force
// minimal attractors and closed-form attractors for periodic structures.
//
// Every verdict about an aperiodic word is bounded: "covered" means every
// factor of length <= N of the stabilized language sample has an occurrence
// crossing the position set inside the reported radius.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strattr/biword.hpp"

namespace strattr {

class PositionSet {
 public:
  enum class Kind { finite, interval, progression };

  // Sorted and deduplicated; throws PreconditionError when empty.
  static PositionSet finite(std::vector<Position> positions);
  // Throws PreconditionError unless lo <= hi.
  static PositionSet interval(Position lo, Position hi);
  // residue + modulus Z, modulus >= 1.
  static PositionSet progression(Position residue, Position modulus);

  Kind kind() const { return kind_; }
  bool bounded() const { return kind_ != Kind::progression; }
  // Bounded sets only.
  Position min() const;
  Position max() const;
  Position span() const { return max() - min(); }
  std::vector<Position> positions() const;
  Position residue() const { return a_; }
  Position modulus() const { return b_; }

  bool contains(Position p) const;
  // Some element lies in [lo, hi].
  bool meets(Position lo, Position hi) const;

  // Same elements (an interval equals the finite set listing it).
  bool same_elements(const PositionSet& other) const;
  bool operator==(const PositionSet& other) const = default;

  std::string describe() const;

 private:
  PositionSet(Kind k, std::vector<Position> pts, Position a, Position b)
      : kind_(k), points_(std::move(pts)), a_(a), b_(b) {}
  Kind kind_ = Kind::finite;
  std::vector<Position> points_;
  Position a_ = 0;  // interval lo / progression residue
  Position b_ = 0;  // interval hi / progression modulus
};

struct CoverageReport {
  bool covered = false;
  std::size_t N = 0;
  Position radius = 0;
  std::optional<Word> witness;
  std::optional<PositionSet> gamma;

  std::string verdict() const {
    return covered ? "covered-up-to-" + std::to_string(N) : "uncovered";
  }
};

struct SpanResult {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::unknown;
  Position value = 0;                     // finite only
  std::optional<PositionSet> attractor;   // finite only
  std::string reason;                     // infinite: theorem tag
  std::string provenance;                 // "window-verified" | "theorem-derived"
  std::size_t N = 0;

  static SpanResult finite(Position value, PositionSet gamma, std::size_t N);
  static SpanResult infinite(std::string reason);
  static SpanResult unknown_up_to(std::size_t N);
};

// Occurrence of w in win crossing gamma. For bounded gamma the window must
// contain [min - |w| + 1, max + |w| - 1]; progressions use every occurrence
// inside the window.
bool is_covered(const Window& win, const PositionSet& gamma, WordView w);

// First uncovered factor of a finite word (shortest, then lexicographic).
std::optional<Word> finite_uncovered(WordView w, const PositionSet& gamma);

// start_radius = 0 picks max(N, reach of gamma).
CoverageReport check_attractor(const BiWordSpec& spec, const PositionSet& gamma,
                               std::size_t N, Position start_radius = 0,
                               const WorkCeiling& ceiling = {});

// Smallest k such that some [a, a+k] with |a| <= search covers every factor of
// length <= N. Ties: smallest |a|, then smallest a. Spans are tried up to
// max_span (default: search).
SpanResult min_span_bruteforce(const BiWordSpec& spec, std::size_t N, Position search,
                               std::optional<Position> max_span = std::nullopt,
                               const WorkCeiling& ceiling = {});

struct MinSizeResult {
  std::size_t size = 0;
  std::vector<Position> positions;
};

// Exhaustive search in increasing size; subsets of one size in lexicographic
// order. Throws ResourceError when |w| > bound.
MinSizeResult min_size_bruteforce(WordView w, std::size_t bound = 20);

struct DoublyPeriodicResult {
  PositionSet gamma = PositionSet::interval(0, 0);
  bool validated = false;
  std::optional<Word> witness;  // set when refuted
};

// [|w| - q, p - 1] for p != q periods of w with p, q <= |w| < p + q, checked by
// finite coverage.
DoublyPeriodicResult doubly_periodic_attractor(WordView w, std::size_t p, std::size_t q);

struct PeriodicAttractor {
  PeriodicStructure structure;
  bool conjugate_periods = false;
  PositionSet gamma = PositionSet::interval(0, 0);
  Position span = 0;
  CoverageReport validation;
};

// Throws PreconditionError for purely periodic input. Validated at
// N = |center| + 4(p + q) (base word center) and radius 4N unless given.
PeriodicAttractor eventually_periodic_attractor(const BiWordSpec& spec,
                                                std::optional<std::size_t> N = std::nullopt,
                                                const WorkCeiling& ceiling = {});

// Default validation length used above.
std::size_t eventually_periodic_check_length(const BiWordSpec& spec);

struct ComplexityBoundReport {
  std::vector<std::size_t> profile;  // p(1..N)
  Position span = 0;
  Position radius = 0;
  bool equality = false;  // p(n) = n + span for every n
};

// p(n) <= n + spn(gamma) for n <= N. gamma must be bounded and pass
// check_attractor at N (PreconditionError otherwise); a violated bound throws
// InvariantViolation.
ComplexityBoundReport complexity_span_consistency(const BiWordSpec& spec,
                                                  const PositionSet& gamma, std::size_t N,
                                                  const WorkCeiling& ceiling = {});

}  // namespace strattr
