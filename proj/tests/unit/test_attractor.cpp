#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "strattr/attractor.hpp"
#include "strattr/error.hpp"

using namespace strattr;

namespace {
BiWordSpec fib() {
  return BiWordSpec::characteristic(DirectiveSequence({}, parse_word("01")), Variant::lower);
}
BiWordSpec step() { return BiWordSpec::eventually_periodic(parse_word("0"), {}, parse_word("1")); }
BiWordSpec ab() { return BiWordSpec::eventually_periodic(parse_word("ab"), {}, parse_word("ab")); }
}  // namespace

TEST_CASE("position sets") {
  auto f = PositionSet::finite({3, -1, 3});
  CHECK(f.positions() == std::vector<Position>{-1, 3});
  CHECK(f.span() == 4);
  CHECK(f.meets(0, 3));
  CHECK_FALSE(f.meets(0, 2));
  auto i = PositionSet::interval(-1, 1);
  CHECK(i.same_elements(PositionSet::finite({-1, 0, 1})));
  auto p = PositionSet::progression(1, 3);
  CHECK_FALSE(p.bounded());
  CHECK(p.contains(-2));
  CHECK(p.meets(2, 4));
  CHECK_FALSE(p.meets(2, 3));
  CHECK_THROWS_AS(PositionSet::finite({}), PreconditionError);
  CHECK_THROWS_AS(PositionSet::interval(2, 1), PreconditionError);
}

TEST_CASE("is_covered on windows") {
  Window w = window(step(), -5, 5);
  CHECK(is_covered(w, PositionSet::finite({-1, 0}), parse_word("0011")));
  CHECK_FALSE(is_covered(w, PositionSet::finite({5}), parse_word("0")));
  auto a = BiWordSpec::eventually_periodic(parse_word("a"), {}, parse_word("a"));
  CHECK(is_covered(window(a, -3, 3), PositionSet::finite({0}), parse_word("aaa")));
  CHECK_THROWS_AS(is_covered(window(step(), -1, 1), PositionSet::finite({0}), parse_word("0011")),
                  PreconditionError);
}

TEST_CASE("check_attractor") {
  auto r = check_attractor(step(), PositionSet::interval(-1, 0), 50);
  CHECK(r.covered);
  CHECK(r.verdict() == "covered-up-to-50");
  auto bad = check_attractor(step(), PositionSet::finite({5}), 2);
  CHECK_FALSE(bad.covered);
  CHECK(to_string(*bad.witness) == "0");
  CHECK(check_attractor(fib(), PositionSet::interval(0, 1), 100).covered);
  // Oracle: the same verdicts by naive scanning of a long window.
  CHECK(oracle::covers(oracle::fib_window(-2000, 2000), -2000, {0, 1}, 20));
  CHECK_FALSE(oracle::covers(oracle::fib_window(-2000, 2000), -2000, {1, 2}, 20));
  CHECK_FALSE(check_attractor(fib(), PositionSet::interval(1, 2), 20).covered);
}

TEST_CASE("min_span_bruteforce") {
  auto s = min_span_bruteforce(step(), 30, 40);
  CHECK(s.kind == SpanResult::Kind::finite);
  CHECK(s.value == 1);
  CHECK(s.attractor->same_elements(PositionSet::interval(-1, 0)));
  auto f = min_span_bruteforce(fib(), 40, 60);
  CHECK(f.value == 1);
  CHECK(f.attractor->same_elements(PositionSet::interval(0, 1)));
  auto p = min_span_bruteforce(ab(), 10, 10);
  CHECK(p.value == 1);
  CHECK(p.attractor->same_elements(PositionSet::interval(0, 1)));
}

TEST_CASE("min_size_bruteforce") {
  CHECK(min_size_bruteforce(parse_word("aaaa")).positions == std::vector<Position>{0});
  CHECK(min_size_bruteforce(parse_word("ab")).positions == std::vector<Position>{0, 1});
  // {1, 2} is also minimal; the search returns the lexicographically first set.
  auto r = min_size_bruteforce(parse_word("abab"));
  CHECK(r.size == 2);
  CHECK(r.positions == std::vector<Position>{0, 1});
  CHECK_FALSE(finite_uncovered(parse_word("abab"), PositionSet::finite({1, 2})));
  CHECK_THROWS_AS(min_size_bruteforce(Word(21, 0)), ResourceError);
}

TEST_CASE("doubly periodic attractors") {
  auto a = doubly_periodic_attractor(parse_word("aabaa"), 3, 4);
  CHECK(a.gamma.same_elements(PositionSet::interval(1, 2)));
  CHECK(a.validated);
  CHECK(doubly_periodic_attractor(parse_word("aa"), 1, 2).validated);
  auto r = doubly_periodic_attractor(parse_word("ababa"), 2, 4);
  CHECK(r.gamma.same_elements(PositionSet::interval(1, 1)));
  CHECK_FALSE(r.validated);
  CHECK(to_string(*r.witness) == "a");
  CHECK_THROWS_AS(doubly_periodic_attractor(parse_word("ababa"), 2, 2), PreconditionError);
  CHECK_THROWS_AS(doubly_periodic_attractor(parse_word("ababa"), 2, 3), PreconditionError);
}

TEST_CASE("eventually periodic attractors") {
  auto s = eventually_periodic_attractor(step());
  CHECK(s.gamma.same_elements(PositionSet::interval(-1, 0)));
  CHECK(s.span == 1);
  CHECK_FALSE(s.conjugate_periods);
  CHECK(s.validation.covered);
  auto c = eventually_periodic_attractor(
      BiWordSpec::eventually_periodic(parse_word("01"), {}, parse_word("10")));
  CHECK(c.gamma.same_elements(PositionSet::interval(0, 1)));
  CHECK(c.conjugate_periods);
  auto d = eventually_periodic_attractor(
      BiWordSpec::eventually_periodic(parse_word("01"), parse_word("0"), parse_word("01")));
  CHECK(d.gamma.same_elements(PositionSet::interval(1, 2)));
  CHECK_THROWS_WITH_AS(eventually_periodic_attractor(ab()),
                       "purely periodic: minimal span not covered by this construction",
                       PreconditionError);
}

TEST_CASE("eventually periodic span matches brute force on random words") {
  std::mt19937 rng(7);
  auto rand_word = [&](std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> len(lo, hi);
    std::uniform_int_distribution<int> bit(0, 1);
    Word w(len(rng));
    for (auto& a : w) a = static_cast<Letter>(bit(rng));
    return w;
  };
  int tested = 0;
  while (tested < 20) {
    auto x = BiWordSpec::eventually_periodic(rand_word(1, 4), rand_word(0, 5), rand_word(1, 4));
    if (std::holds_alternative<PurelyPeriodic>(normalize_eventually_periodic(x))) continue;
    ++tested;
    auto pa = eventually_periodic_attractor(x);
    const auto N = eventually_periodic_check_length(x);
    auto bf = min_span_bruteforce(x, N, 2 * static_cast<Position>(N));
    REQUIRE(bf.kind == SpanResult::Kind::finite);
    CHECK(pa.span == bf.value);
    CHECK(pa.validation.covered);
  }
}

TEST_CASE("complexity against span") {
  auto r = complexity_span_consistency(step(), PositionSet::interval(-1, 0), 30);
  CHECK(r.equality);
  auto f = complexity_span_consistency(fib(), PositionSet::interval(0, 1), 40);
  CHECK(f.equality);
  auto p = complexity_span_consistency(ab(), PositionSet::interval(0, 1), 10);
  CHECK_FALSE(p.equality);
  CHECK(p.profile.back() == 2);
  CHECK_THROWS_AS(complexity_span_consistency(fib(), PositionSet::interval(1, 2), 20),
                  PreconditionError);
}
