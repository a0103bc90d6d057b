#include "doctest.h"
#include "oracles.hpp"
#include "strattr/error.hpp"
#include "strattr/substitution.hpp"

using namespace strattr;

namespace {
BiWordSpec fib() {
  return BiWordSpec::characteristic(DirectiveSequence({}, parse_word("01")), Variant::lower);
}
BiWordSpec step() { return BiWordSpec::eventually_periodic(parse_word("0"), {}, parse_word("1")); }
Substitution abc() { return Substitution({{0, parse_word("a")}, {1, parse_word("bc")}}); }
}  // namespace

TEST_CASE("image of position sets") {
  CHECK(image_attractor(step(), abc(), PositionSet::finite({-1, 0}))
            .same_elements(PositionSet::finite({-1, 0, 1})));
  CHECK(image_attractor(step(), abc(), PositionSet::finite({2})).same_elements(PositionSet::finite({4, 5})));
  auto id = Substitution::identity({0, 1});
  auto g = PositionSet::finite({-3, 2, 7});
  CHECK(image_attractor(fib(), id, g).same_elements(g));
  CHECK(support(step(), abc(), 0) == std::pair<Position, Position>{0, 1});
  CHECK(image_start(step(), abc(), -1) == -1);
}

TEST_CASE("preimage of position sets") {
  CHECK(preimage_attractor(step(), abc(), PositionSet::finite({0, 1})).same_elements(PositionSet::finite({0})));
  auto id = Substitution::identity({0, 1});
  CHECK(preimage_attractor(fib(), id, PositionSet::finite({4})).same_elements(PositionSet::finite({4})));
  Substitution psi({{0, parse_word("01")}, {1, parse_word("00")}});
  auto g0 = PositionSet::finite({-5, 0, 3});
  auto img = image_attractor(fib(), psi, g0);
  CHECK(preimage_attractor(fib(), psi, img).same_elements(g0));
}

TEST_CASE("window images") {
  Window w{-1, parse_word("01")};
  auto out = apply(abc(), w);
  CHECK(out.offset == -1);
  CHECK(to_string(out.content) == "abc");
  Window left{-2, parse_word("01")};
  auto l = apply(abc(), left);
  CHECK(l.offset == -3);
  CHECK_THROWS_AS(apply(abc(), Window{1, parse_word("0")}), PreconditionError);
}

TEST_CASE("image attractors validate on the image word") {
  Substitution psi({{0, parse_word("01")}, {1, parse_word("00")}});
  auto img = image_attractor(fib(), psi, PositionSet::interval(0, 1));
  CHECK(check_attractor(apply(psi, fib()), img, 40).covered);
}

TEST_CASE("trimming images under return morphisms") {
  Substitution phi({{0, parse_word("0")}, {1, parse_word("10")}});
  auto t = trim_image_attractor(fib(), phi, parse_word("0"), PositionSet::interval(0, 1), 60);
  CHECK(t.certificate.valid);
  CHECK(t.trimmed.positions().size() + 1 == t.image.positions().size());
  CHECK(t.validation.covered);
  CHECK_THROWS_AS(trim_image_attractor(fib(), Substitution::L0(), parse_word("0"),
                                       PositionSet::interval(0, 1), 20),
                  PreconditionError);
}

TEST_CASE("lifting interval attractors") {
  Substitution phi({{0, parse_word("0")}, {1, parse_word("10")}});
  auto x = apply(phi, fib());
  auto s = min_span_bruteforce(x, 30, 30);
  REQUIRE(s.kind == SpanResult::Kind::finite);
  auto lift = lift_attractor_return(fib(), phi, parse_word("0"), *s.attractor, 40);
  CHECK(lift.validation.covered);
  auto off = lift_attractor_return(fib(), phi, parse_word("0"), PositionSet::interval(40, 40), 20);
  CHECK_FALSE(off.validation.covered);
}

TEST_CASE("L0 desubstitution worked example") {
  auto y = BiWordSpec::eventually_periodic(parse_word("1"), parse_word("0"), parse_word("1"));
  CHECK(to_string(window(apply(Substitution::L0(), y), -4, 4).content) == "010100101");
  auto r = desubstitute_L(y, 0, PositionSet::interval(1, 2), 50);
  CHECK(r.m == 1);
  CHECK(r.ell == 0);
  CHECK_FALSE(r.removed_left);
  CHECK_FALSE(r.removed_right);
  CHECK(r.result.same_elements(PositionSet::interval(0, 1)));
  CHECK(r.validation.covered);
  auto single = desubstitute_L(y, 0, PositionSet::interval(2, 2), 10);
  CHECK(single.ell == 0);
}
