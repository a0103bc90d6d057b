#include "doctest.h"
#include "oracles.hpp"
#include "strattr/error.hpp"
#include "strattr/modular.hpp"
#include "strattr/substitution.hpp"

using namespace strattr;

namespace {
BiWordSpec fib() {
  return BiWordSpec::characteristic(DirectiveSequence({}, parse_word("01")), Variant::lower);
}
BiWordSpec img(const char* a, const char* b) {
  return apply(Substitution({{0, parse_word(a)}, {1, parse_word(b)}}), fib());
}
BiWordSpec constant() { return BiWordSpec::eventually_periodic(parse_word("a"), {}, parse_word("a")); }
BiWordSpec alternating() {
  return BiWordSpec::eventually_periodic(parse_word("01"), {}, parse_word("01"));
}
}  // namespace

TEST_CASE("occurrence residues") {
  CHECK(occ_mod(img("01", "10"), parse_word("01"), 2, 50).residues == std::vector<Position>{0});
  CHECK(occ_mod(constant(), parse_word("aa"), 3, 50).full());
  CHECK(occ_mod(fib(), parse_word("0"), 2, 50).residues == std::vector<Position>{0, 1});
  // Residues only grow with the radius.
  auto small = occ_mod(fib(), parse_word("00100"), 5, 10);
  auto large = occ_mod(fib(), parse_word("00100"), 5, 200);
  for (Position r : small.residues) CHECK(large.contains(r));
  CHECK_THROWS_AS(occ_mod(fib(), parse_word("0"), 0, 10), PreconditionError);
}

TEST_CASE("arithmetic progression attractors") {
  auto bad = ap_attractor_check(img("01", "00"), 0, 2, 5);
  CHECK_FALSE(bad.covered);
  CHECK(to_string(*bad.witness) == "1");
  CHECK(ap_attractor_check(fib(), 0, 3, 40).covered);
  CHECK(ap_attractor_check(img("01", "10"), 1, 4, 20).covered);
}

TEST_CASE("modulo recurrence") {
  CHECK(modulo_recurrent_upto(fib(), 5, 20, 2000).pass);
  auto r = modulo_recurrent_upto(img("01", "10"), 2, 2, 0);
  CHECK_FALSE(r.pass);
  bool found = false;
  for (const auto& f : r.failures) {
    if (f.k == 2 && to_string(f.w) == "01") {
      found = true;
      CHECK(f.missing == std::vector<Position>{1});
    }
  }
  CHECK(found);
  CHECK(modulo_recurrent_upto(constant(), 4, 4, 0).pass);
}

TEST_CASE("modulo recurrence implies progression attractors") {
  auto x = fib();
  const std::size_t N = 8;
  REQUIRE(modulo_recurrent_upto(x, 4, N, 500).pass);
  for (Position k = 1; k <= 4; ++k) {
    for (Position i = 0; i < k; ++i) CHECK(ap_attractor_check(x, i, k, N, 500).covered);
  }
}

TEST_CASE("density budgets") {
  auto eta = DensityBudget::floor_log2();
  for (Position n = 0; n < 300; ++n) {
    CHECK(eta.value(n) == static_cast<Position>(std::bit_width(static_cast<std::uint64_t>(n + 2)) - 1));
  }
  CHECK(eta.reach(1) == 0);
  CHECK(eta.reach(2) == 2);
  CHECK(eta.reach(5) == 30);
  CHECK_THROWS_AS(DensityBudget(0, {3, 2}, 2, 0), PreconditionError);
  CHECK_THROWS_AS(DensityBudget(0, {2}, 1, 0), PreconditionError);
  CHECK_THROWS_AS(eta.reach(70), ResourceError);
}

TEST_CASE("sparse attractors") {
  auto eta = DensityBudget::floor_log2();
  auto r = sparse_attractor(fib(), eta, 6);
  CHECK(r.density_ok);
  CHECK(r.coverage_ok);
  CHECK(r.enumeration.size() == r.selected.size());
  // Independent density count over the reported set.
  for (Position g : r.gamma.positions()) {
    const Position n = g < 0 ? -g : g;
    Position count = 0;
    for (Position h : r.gamma.positions()) count += (h >= -n && h <= n);
    CHECK(count <= eta.value(n));
  }
  auto b = sparse_block_attractor(fib(), eta, 6);
  CHECK(b.density_ok);
  CHECK(b.coverage_ok);
  CHECK(check_attractor(fib(), b.gamma, 6).covered);

  DensityBudget huge(1000, {1}, 2, 0);
  auto near = sparse_attractor(fib(), huge, 4);
  CHECK(near.gamma.max() - near.gamma.min() < 20);
  CHECK(near.coverage_ok);
}

TEST_CASE("sparse attractors need recurrence") {
  auto step = BiWordSpec::eventually_periodic(parse_word("0"), {}, parse_word("1"));
  CHECK_THROWS_WITH_AS(sparse_attractor(step, DensityBudget::floor_log2(), 2),
                       doctest::Contains("factor 01 occurs once"), PreconditionError);
}

TEST_CASE("recurrence constants") {
  CHECK(recurrence_constant(fib(), parse_word("0"), 500) == 2);
  CHECK(recurrence_constant(fib(), parse_word("1"), 500) == 3);
  CHECK(recurrence_constant(constant(), parse_word("a"), 50) == 1);
  CHECK_THROWS_AS(recurrence_constant(fib(), parse_word("11"), 500), PreconditionError);
}

TEST_CASE("sliding block codes") {
  LocalRule id{1, {{parse_word("0"), 0}, {parse_word("1"), 1}}};
  CHECK(apply_sliding_block(fib(), id, -20, 20) == window(fib(), -20, 20));
  LocalRule xr{2,
               {{parse_word("00"), 0}, {parse_word("01"), 1}, {parse_word("10"), 1}, {parse_word("11"), 0}}};
  auto out = apply_sliding_block(alternating(), xr, -10, 10);
  for (Letter a : out.content) CHECK(a == 1);
  LocalRule partial{2, {{parse_word("01"), 1}}};
  CHECK_THROWS_WITH_AS(apply_sliding_block(alternating(), partial, 0, 3),
                       doctest::Contains("10"), PreconditionError);
}

TEST_CASE("periodizing rules") {
  auto psi = img("01", "00");
  auto pr = periodizing_rule(psi, parse_word("1"), 2, 2000);
  REQUIRE(pr);
  auto out = apply_sliding_block(psi, pr->rule, -300, 300);
  for (Position n = -300; n + 2 <= 300; ++n) CHECK(out.at(n) == out.at(n + 2));
  CHECK(out.at(0) != out.at(1));
  CHECK_FALSE(periodizing_rule(fib(), parse_word("0"), 2, 2000));
  auto ab = BiWordSpec::eventually_periodic(parse_word("ab"), {}, parse_word("ab"));
  auto pa = periodizing_rule(ab, parse_word("a"), 2, 200);
  REQUIRE(pa);
  auto o = apply_sliding_block(ab, pa->rule, -20, 20);
  CHECK(o.at(0) != o.at(1));
  CHECK(o.at(0) == o.at(2));
}
