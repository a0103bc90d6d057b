#pragma once

// Occurrence residues, modulo-recurrence, arithmetic-progression attractors,
// sparse attractors under a density budget and sliding block codes.
//
// Verdicts quantify over finitely many positions: "pass" means no
// counterexample within the reported radius, "fail" carries a witness.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strattr/attractor.hpp"
#include "strattr/biword.hpp"

namespace strattr {

struct ResidueSet {
  Position modulus = 1;
  std::vector<Position> residues;  // sorted subset of [0, modulus)
  Position radius = 0;

  bool full() const { return static_cast<Position>(residues.size()) == modulus; }
  bool contains(Position r) const;
};

// Residues mod k of occurrence starts of w inside window(-radius, radius).
ResidueSet occ_mod(const BiWordSpec& spec, WordView w, Position k, Position radius,
                   const WorkCeiling& ceiling = {});

// i + kZ against every factor of length <= N: Occ_k(x, w) must meet
// [i - |w| + 1, i] mod k. Occurrences are read within the larger of radius and
// the stabilized sample radius.
CoverageReport ap_attractor_check(const BiWordSpec& spec, Position i, Position k, std::size_t N,
                                  Position radius = 0, const WorkCeiling& ceiling = {});

struct ModuloFailure {
  Position k = 0;
  Word w;
  std::vector<Position> missing;
};

struct ModuloRecurrenceReport {
  bool pass = false;
  Position K = 0;
  std::size_t N = 0;
  Position radius = 0;
  std::vector<ModuloFailure> failures;  // by k, then length, then lexicographic
};

ModuloRecurrenceReport modulo_recurrent_upto(const BiWordSpec& spec, Position K, std::size_t N,
                                             Position radius, const WorkCeiling& ceiling = {});

// Non-decreasing eta(n) = base + #{jumps <= n}; the explicit jumps continue by
// next = tail_mul * previous + tail_add, which must strictly increase.
class DensityBudget {
 public:
  DensityBudget(Position base, std::vector<Position> jumps, Position tail_mul, Position tail_add);

  // eta(n) = floor(log2(n + 2)).
  static DensityBudget floor_log2();

  Position value(Position n) const;
  // Least n >= 0 with eta(n) >= v.
  Position reach(Position v) const;
  std::vector<Position> jumps_up_to(Position v) const;

  Position base() const { return base_; }
  const std::vector<Position>& jumps() const { return jumps_; }
  Position tail_mul() const { return mul_; }
  Position tail_add() const { return add_; }

 private:
  Position base_;
  std::vector<Position> jumps_;
  Position mul_, add_;
};

struct SparseReport {
  PositionSet gamma = PositionSet::interval(0, 0);
  std::vector<Word> enumeration;          // factors in selection order
  std::vector<Position> selected;         // gamma_i, or block starts
  std::vector<std::size_t> block_lengths; // block variant only
  bool density_ok = false;
  std::optional<Position> density_violation;  // smallest n with #(G & [-n, n]) > eta(n)
  bool coverage_ok = false;
  std::optional<Word> uncovered;
  Position radius = 0;
};

// Greedy gamma_i: the position closest to 0 (ties: negative first) with
// eta(|gamma_i|) >= i crossed by an occurrence of the i-th factor (by length,
// then lexicographic). Throws PreconditionError naming a factor that does not
// occur at least twice on each side of 0 within the radius.
SparseReport sparse_attractor(const BiWordSpec& spec, const DensityBudget& budget, std::size_t N,
                              Position radius = 0, const WorkCeiling& ceiling = {});

// Union of blocks [gamma, gamma + c_i - 1] with a common start: c_i are the
// measured recurrence constants and gamma is the least start keeping the
// density bound.
SparseReport sparse_block_attractor(const BiWordSpec& spec, const DensityBudget& budget,
                                    std::size_t N, Position radius = 0,
                                    const WorkCeiling& ceiling = {});

// Smallest c such that every length-c block of window(-radius, radius)
// contains w. Throws PreconditionError when w is absent.
std::size_t recurrence_constant(const BiWordSpec& spec, WordView w, Position radius,
                                const WorkCeiling& ceiling = {});
std::size_t recurrence_constant(const Window& win, WordView w);

struct LocalRule {
  std::size_t M = 1;
  std::map<Word, Letter> table;
};

// Output at [i, j]: pi(x)_n = psi(x_[n, n+M-1]). The input must cover
// [i, j + M - 1]; table misses throw PreconditionError naming the block.
Window apply_sliding_block(const Window& input, const LocalRule& rule, Position i, Position j);
Window apply_sliding_block(const BiWordSpec& spec, const LocalRule& rule, Position i, Position j,
                           const WorkCeiling& ceiling = {});

struct PeriodizingRule {
  LocalRule rule;
  ResidueSet occurrences;
  std::vector<Position> representatives;  // one occurrence per residue, closest to 0
  Position N = 0;                         // |w| + max |n_j|
  Word u;                                 // x_[-N, N]
  Position radius = 0;
};

// nullopt when Occ_k(x, w) is empty or all of Z/kZ within the radius.
std::optional<PeriodizingRule> periodizing_rule(const BiWordSpec& spec, WordView w, Position k,
                                                Position radius, const WorkCeiling& ceiling = {});

}  // namespace strattr
