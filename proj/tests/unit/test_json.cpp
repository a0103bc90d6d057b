#include "doctest.h"
#include "strattr/error.hpp"
#include "strattr/json_io.hpp"

using namespace strattr;

TEST_CASE("spec round trips are byte-identical") {
  for (const char* text : {
           R"({"type":"eventually-periodic","left":"0","center":"","right":"1"})",
           R"({"type":"char-sturmian","head":"","tail":"01","variant":"lower"})",
           R"({"type":"shift","m":3,"inner":{"type":"char-sturmian","head":"1","tail":"0011","variant":"upper"}})",
           R"({"type":"image","phi":{"0":"01","1":"00"},"residue":0,"inner":{"type":"char-sturmian","head":"","tail":"01","variant":"lower"}})",
           R"({"type":"orbit-point","inner":{"type":"char-sturmian","head":"","tail":"01","variant":"lower"}})",
       }) {
    CHECK(dump_spec(parse_spec(text)) == text);
  }
}

TEST_CASE("reserved substitution names") {
  auto s = parse_spec(
      R"({"type":"image","phi":"L0","inner":{"type":"eventually-periodic","left":"0","center":"","right":"1"}})");
  CHECK(s.as<MorphicImage>()->phi == Substitution::L0());
  CHECK(s.as<MorphicImage>()->residue == 0);
  CHECK(substitution_from_json(Json("L1")) == Substitution::L1());
}

TEST_CASE("parse errors name the field") {
  CHECK_THROWS_WITH_AS(parse_spec(R"({"type":"char-sturmian","head":"","variant":"lower"})"),
                       doctest::Contains("missing field \"tail\""), ParseError);
  CHECK_THROWS_WITH_AS(parse_spec(R"({"type":"shift","inner":{"type":"char-sturmian"}})"),
                       doctest::Contains("missing field \"m\""), ParseError);
  CHECK_THROWS_WITH_AS(parse_spec(R"({"type":"shift","m":1,"inner":{"type":"eventually-periodic","left":"0","center":""}})"),
                       doctest::Contains("$.inner: missing field \"right\""), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"type":"nope"})"), ParseError);
  CHECK_THROWS_AS(parse_spec("{"), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"type":"char-sturmian","head":"","tail":"00","variant":"lower"})"),
                  ParseError);
}

TEST_CASE("position sets") {
  for (const auto& g : {PositionSet::interval(-1, 0), PositionSet::finite({5, 7}),
                        PositionSet::progression(1, 3)}) {
    CHECK(position_set_from_json(to_json(g)) == g);
  }
}

TEST_CASE("report key order is fixed") {
  CoverageReport r;
  r.covered = true;
  r.N = 5;
  r.radius = 20;
  r.gamma = PositionSet::interval(0, 1);
  CHECK(to_json(r).dump() ==
        R"({"verdict":"covered-up-to-5","N":5,"radius":20,"witness":null,"attractor":{"kind":"interval","lo":0,"hi":1},"span":1})");
  ResidueSet s{2, {0}, 50};
  CHECK(to_json(s).dump() == R"({"k":2,"residues":[0],"radius":50})");
  LocalRule rule{2, {{parse_word("01"), 1}}};
  CHECK(to_json(rule).dump() == R"({"M":2,"table":{"01":"1"}})");
}
