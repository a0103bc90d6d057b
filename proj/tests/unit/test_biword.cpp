#include "doctest.h"
#include "oracles.hpp"
#include "strattr/biword.hpp"
#include "strattr/error.hpp"
#include "strattr/substitution.hpp"

using namespace strattr;

namespace {
BiWordSpec fib() {
  return BiWordSpec::characteristic(DirectiveSequence({}, parse_word("01")), Variant::lower);
}
BiWordSpec step() { return BiWordSpec::eventually_periodic(parse_word("0"), {}, parse_word("1")); }
std::string win(const BiWordSpec& s, Position i, Position j) {
  return to_string(window(s, i, j).content);
}
}  // namespace

TEST_CASE("eventually periodic windows") {
  CHECK(win(step(), -2, 1) == "0011");
  CHECK(win(BiWordSpec::shifted(step(), 1), -2, 1) == "0111");
  auto x = BiWordSpec::eventually_periodic(parse_word("01"), parse_word("0"), parse_word("01"));
  CHECK(win(x, -4, 4) == "010100101");
  CHECK_THROWS_AS(window(step(), 3, 2), PreconditionError);
}

TEST_CASE("characteristic windows agree with the Fibonacci fixed point") {
  CHECK(win(fib(), -4, 5) == "0010100100");
  CHECK(win(fib(), -300, 300) == oracle::fib_window(-300, 300));
  const Position far = 1'000'000;
  CHECK(win(fib(), far - 50, far + 50) == oracle::fib_window(far - 50, far + 50));
  CHECK(win(fib(), -far - 50, -far + 50) == oracle::fib_window(-far - 50, -far + 50));
}

TEST_CASE("far windows stay exact") {
  const Position p = Position{1} << 44;
  auto w = window(fib(), p, p + 63);
  CHECK(w.size() == 64);
  // Sturmian balance: every length-64 factor has 24 or 25 ones.
  std::size_t ones = 0;
  for (Letter a : w.content) ones += a;
  CHECK(ones >= 24);
  CHECK(ones <= 25);
}

TEST_CASE("left special prefixes and char windows") {
  DirectiveSequence d({}, parse_word("01"));
  CHECK(to_string(left_special_prefix(d, 5)) == "01001");
  CHECK(left_special_prefix(d, 0).empty());
  CHECK(to_string(left_special_prefix(d, 1)) == "0");
  auto cw = char_window(d, Variant::lower, 4);
  CHECK(cw.offset == -4);
  CHECK(to_string(cw.content) == "0010100100");
  CHECK(to_string(char_window(d, Variant::upper, 0).content) == "01");
  CHECK(to_string(char_window(d, Variant::lower, 0).content) == "10");
}

TEST_CASE("directive validation") {
  CHECK_THROWS_AS(DirectiveSequence({}, parse_word("00")), PreconditionError);
  CHECK_THROWS_AS(DirectiveSequence({}, {}), PreconditionError);
  CHECK_THROWS_AS(DirectiveSequence(parse_word("2"), parse_word("01")), PreconditionError);
}

TEST_CASE("morphic images") {
  Substitution psi({{0, parse_word("01")}, {1, parse_word("00")}});
  auto x = apply(psi, fib());
  // psi(x_0 x_1) = psi(10) = 0001 at [0, 3].
  CHECK(win(x, 0, 3) == "0001");
  const std::string f = oracle::fib_window(-20, 20);
  std::string expect;
  for (char c : f) expect += c == '0' ? "01" : "00";
  CHECK(win(x, -40, 41) == expect);
  CHECK_THROWS_AS(BiWordSpec::image(fib(), psi, 2), PreconditionError);
  CHECK(win(BiWordSpec::image(fib(), psi, 1), 0, 2) == "001");
}

TEST_CASE("orbit points have no windows but keep the language") {
  auto o = BiWordSpec::orbit_point(fib());
  CHECK_FALSE(o.window_computable());
  CHECK_THROWS_AS(window(o, 0, 3), SymbolicError);
  CHECK(language_source(o) == fib());
}

TEST_CASE("work ceiling") {
  WorkCeiling tight;
  tight.max_symbols = 100;
  CHECK_THROWS_AS(window(fib(), 0, 1000, tight), ResourceError);
}

TEST_CASE("eventually periodic normalization") {
  auto n1 = normalize_eventually_periodic(step());
  CHECK(std::get<PeriodicStructure>(n1) == PeriodicStructure{0, 1, -1, 1});
  auto x2 = BiWordSpec::eventually_periodic(parse_word("01"), {}, parse_word("10"));
  CHECK(std::get<PeriodicStructure>(normalize_eventually_periodic(x2)) == PeriodicStructure{0, 2, -1, 2});
  auto x3 = BiWordSpec::eventually_periodic(parse_word("01"), parse_word("0"), parse_word("01"));
  CHECK(std::get<PeriodicStructure>(normalize_eventually_periodic(x3)) == PeriodicStructure{1, 2, 0, 2});
  auto ab = BiWordSpec::eventually_periodic(parse_word("ab"), {}, parse_word("ab"));
  CHECK(std::holds_alternative<PurelyPeriodic>(normalize_eventually_periodic(ab)));
  CHECK_THROWS_AS(normalize_eventually_periodic(fib()), PreconditionError);
  // Shifts reduce to the base word.
  auto r = reduce_to_eventually_periodic(BiWordSpec::shifted(step(), 3));
  REQUIRE(r);
  CHECK(r->shift == 3);
}

TEST_CASE("complexity profiles") {
  CHECK(factor_complexity_profile(step(), 4, 8).counts == std::vector<std::size_t>{2, 3, 4, 5});
  CHECK(factor_complexity_profile(fib(), 5, 8).counts == std::vector<std::size_t>{2, 3, 4, 5, 6});
  auto ab = BiWordSpec::eventually_periodic(parse_word("ab"), {}, parse_word("ab"));
  CHECK(factor_complexity_profile(ab, 3, 8).counts == std::vector<std::size_t>{2, 2, 2});
  auto p = factor_complexity_profile(fib(), 40, 40);
  const std::string text = oracle::fib_window(-4 * p.radius, 4 * p.radius);
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(p.at(n) == n + 1);
    CHECK(oracle::distinct_factors(text, n) == n + 1);
  }
  CHECK_THROWS_AS(factor_complexity_profile(fib(), 10, 5), PreconditionError);
}
