#include "doctest.h"
#include "strattr/error.hpp"
#include "strattr/morphism.hpp"
#include "strattr/word.hpp"

using namespace strattr;

namespace {
FactorSet set_of(std::initializer_list<const char*> ws) {
  FactorSet s;
  for (const char* w : ws) {
    s.factors.insert(parse_word(w));
    s.length = std::string(w).size();
  }
  return s;
}
}  // namespace

TEST_CASE("letter names round trip") {
  CHECK(letter_from_name('0') == 0);
  CHECK(letter_from_name('a') == 10);
  CHECK(to_string(parse_word("0aZ9")) == "0aZ9");
  CHECK_THROWS_AS(parse_word("0-1"), ParseError);
}

TEST_CASE("factors") {
  CHECK(factors(parse_word("abab"), 2) == set_of({"ab", "ba"}));
  CHECK(factors(parse_word("aaaa"), 1).size() == 1);
  CHECK(factors(parse_word("0100101"), 3) == set_of({"010", "100", "001", "101"}));
  CHECK(factors(parse_word("01"), 3).size() == 0);
}

TEST_CASE("periods") {
  CHECK(periods(parse_word("ababa")) == std::vector<std::size_t>{2, 4, 5});
  CHECK(periods(parse_word("aaaa")) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(periods(parse_word("abc")) == std::vector<std::size_t>{3});
  CHECK_THROWS_WITH_AS(periods(Word{}), "empty word has no periods", PreconditionError);
}

TEST_CASE("special factors") {
  auto sf = special_factors(set_of({"0", "1"}), set_of({"00", "01", "10"}));
  CHECK(sf.left == std::set<Word>{parse_word("0")});
  CHECK(sf.right == std::set<Word>{parse_word("0")});
  auto full = special_factors(set_of({"0", "1"}), set_of({"00", "01", "10", "11"}));
  CHECK(full.left.size() == 2);
  CHECK(full.right.size() == 2);
  auto constant = special_factors(set_of({"a"}), set_of({"aa"}));
  CHECK(constant.left.empty());
  CHECK(constant.right.empty());
  CHECK_THROWS_AS(special_factors(set_of({"0"}), set_of({"01"})), PreconditionError);
}

TEST_CASE("balance") {
  CHECK(is_balanced(set_of({"0100", "1001", "0010", "0101", "1010"})).balanced);
  auto r = is_balanced(set_of({"0011", "0101", "1111"}));
  CHECK_FALSE(r.balanced);
  REQUIRE(r.witness);
  CHECK(to_string(r.witness->first) == "0011");
  CHECK(to_string(r.witness->second) == "1111");
  CHECK(is_balanced(set_of({"0110"})).balanced);
  CHECK_THROWS_AS(is_balanced(set_of({"012"})), PreconditionError);
}

TEST_CASE("reversal, roots, conjugacy, occurrences") {
  CHECK(to_string(reversal(parse_word("0010"))) == "0100");
  CHECK(reversal(Word{}).empty());
  CHECK(to_string(reversal(parse_word("aba"))) == "aba");
  CHECK(to_string(primitive_root(parse_word("ababab"))) == "ab");
  CHECK(to_string(primitive_root(parse_word("aba"))) == "aba");
  CHECK(are_conjugate(parse_word("01"), parse_word("10")));
  CHECK_FALSE(are_conjugate(parse_word("0"), parse_word("1")));
  CHECK(occurrences(parse_word("aaa"), parse_word("aa")) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("substitutions") {
  CHECK(to_string(Substitution::L0().apply(parse_word("11"))) == "0101");
  CHECK(to_string(Substitution::L1().apply(parse_word("01"))) == "101");
  Substitution psi({{0, parse_word("01")}, {1, parse_word("00")}});
  CHECK(to_string(psi.apply(parse_word("01001"))) == "0100010100");
  CHECK_THROWS_AS(psi.apply(parse_word("2")), PreconditionError);
  CHECK_THROWS_AS(Substitution({{0, Word{}}}), PreconditionError);
  CHECK(is_acyclic(Substitution::L0()));
  CHECK_FALSE(is_acyclic(Substitution({{0, parse_word("abab")}, {1, parse_word("ab")}})));
  CHECK(is_acyclic(psi));
}

TEST_CASE("return morphism certificates") {
  CHECK(is_return_morphism(Substitution({{0, parse_word("0")}, {1, parse_word("10")}}), parse_word("0")).valid);
  // w phi(1) = 001 does not end with w.
  CHECK_FALSE(is_return_morphism(Substitution::L0(), parse_word("0")).valid);
  CHECK(is_return_morphism(Substitution({{10, parse_word("a")}}), parse_word("a")).valid);
  auto bad = is_return_morphism(Substitution({{0, parse_word("01")}, {1, parse_word("00")}}), parse_word("0"));
  CHECK_FALSE(bad.valid);
}
