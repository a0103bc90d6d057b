#include "doctest.h"
#include "strattr/error.hpp"
#include "strattr/quasisturmian.hpp"
#include "strattr/substitution.hpp"

using namespace strattr;

namespace {
BiWordSpec fib() {
  return BiWordSpec::characteristic(DirectiveSequence({}, parse_word("01")), Variant::lower);
}
Substitution sub(const char* a, const char* b) {
  return Substitution({{0, parse_word(a)}, {1, parse_word(b)}});
}
}  // namespace

TEST_CASE("Rauzy graphs") {
  auto s = sample_language(fib(), 3, 8);
  auto g = build_rauzy(s.factors(2), s.factors(3));
  CHECK(g.vertices.size() == 3);
  CHECK(g.edges.size() == 4);
  std::size_t branching = 0;
  for (auto d : g.out_degree) branching += d == 2;
  CHECK(branching == 1);
}

TEST_CASE("n0 and bispecial factors") {
  auto psi = apply(sub("01", "00"), fib());
  auto prof = factor_complexity_profile(psi, 20, 20);
  CHECK(measure_n0(prof) == 3);
  auto b = find_bispecial(psi, 3, 20);
  CHECK(to_string(b.w) == "010");
}

TEST_CASE("return morphism extraction") {
  auto psi = apply(sub("01", "00"), fib());
  auto ex = extract(psi, 40);
  CHECK(to_string(ex.w) == "010");
  CHECK(to_string(ex.phi.image(0)) == "0010");
  CHECK(to_string(ex.phi.image(1)) == "10");
  CHECK(ex.certificate.valid);
  CHECK(ex.k == 2);
  CHECK(ex.k_matches);
  auto rep = desubstitute(psi, ex, 40);
  CHECK(rep.round_trip);
  CHECK(rep.sturmian());

  auto phi = apply(sub("01", "10"), fib());
  auto e2 = extract(phi, 40);
  CHECK(to_string(e2.w) == "011001");
  CHECK(e2.k == 3);
  CHECK(e2.certificate.valid);
}

TEST_CASE("non quasi-Sturmian samples are rejected") {
  auto ab = BiWordSpec::eventually_periodic(parse_word("01"), {}, parse_word("01"));
  CHECK_THROWS_AS(extract(ab, 20), PreconditionError);
}

TEST_CASE("quasi-Sturmian spans") {
  auto psi = apply(sub("01", "00"), fib());
  auto q = classify_qs_span(psi, 60);
  CHECK(q.span.value == 2);
  CHECK(q.span.attractor->span() == 2);
  CHECK(check_attractor(psi, *q.span.attractor, 60).covered);
  auto o = classify_qs_span(BiWordSpec::orbit_point(psi), 60);
  CHECK(o.span.kind == SpanResult::Kind::infinite);
}

TEST_CASE("finite attractor classifier") {
  auto step = BiWordSpec::eventually_periodic(parse_word("0"), {}, parse_word("1"));
  auto v = finite_attractor_classifier(step);
  CHECK(v.kind == FiniteAttractorVerdict::Kind::bi_eventually_periodic);
  CHECK(*v.span == 1);
  CHECK(*v.complexity_law);
  auto psi = apply(sub("01", "00"), fib());
  auto w = finite_attractor_classifier(psi);
  CHECK(w.kind == FiniteAttractorVerdict::Kind::characteristic_morphic_image);
  CHECK(*w.span == 2);
  auto o = finite_attractor_classifier(BiWordSpec::orbit_point(fib()));
  CHECK(o.kind == FiniteAttractorVerdict::Kind::no_finite_attractor);
  CHECK(o.provenance == "theorem-derived");
  CHECK(std::string(to_string(o.kind)) == "NoFiniteAttractor");
}
