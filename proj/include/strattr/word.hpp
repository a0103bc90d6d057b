#pragma once

// Finite-word primitives shared by every other module.
//
// Letters are small integer codes. Their printable names come from a fixed
// table ("0".."9", "a".."z", "A".."Z"), so the code of '0' is 0, the code of
// 'a' is 10 and so on. Names only matter at I/O boundaries.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strattr {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;
using Position = std::int64_t;

inline constexpr std::string_view kLetterNames =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

Letter letter_from_name(char name);
char letter_name(Letter a);

Word parse_word(std::string_view text);
std::string to_string(WordView w);
inline std::string to_string(const Word& w) { return to_string(WordView{w}); }

// Byte view used as a hash key; valid as long as the underlying letters are.
inline std::string_view as_key(WordView w) {
  return {reinterpret_cast<const char*>(w.data()), w.size()};
}

inline Word slice(WordView w, std::size_t start, std::size_t length) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(start),
              w.begin() + static_cast<std::ptrdiff_t>(start + length));
}

Word concat(WordView u, WordView v);

// Set of distinct words sharing one length.
struct FactorSet {
  std::size_t length = 0;
  std::set<Word> factors;

  std::size_t size() const { return factors.size(); }
  bool contains(const Word& w) const { return factors.count(w) != 0; }
  bool operator==(const FactorSet&) const = default;
};

// All distinct length-n blocks of w; empty when n > |w|.
FactorSet factors(WordView w, std::size_t n);

// Every p in [1, |w|] with w_i = w_{i+p} wherever both sides exist.
std::vector<std::size_t> periods(WordView w);

struct SpecialFactors {
  std::set<Word> left;
  std::set<Word> right;
  std::set<Word> bispecial() const;
};

// Left/right special factors of length n read off a language sample given at
// lengths n and n+1. Throws PreconditionError on an inconsistent sample.
SpecialFactors special_factors(const FactorSet& at_n, const FactorSet& at_n1);

struct BalanceResult {
  bool balanced = true;
  std::optional<std::pair<Word, Word>> witness;
};

// Pairwise balance of a same-length sample over at most two letters. The
// counted letter is the smaller code present (0 for binary samples).
BalanceResult is_balanced(const FactorSet& sample);

Word reversal(WordView w);

// Shortest z with w = z^k. Empty for the empty word.
Word primitive_root(WordView w);

// u and v are cyclic rotations of one another.
bool are_conjugate(WordView u, WordView v);

// Start indices of (possibly overlapping) occurrences of pattern in text.
std::vector<std::size_t> occurrences(WordView text, WordView pattern);

// Distinct letters in w, sorted.
std::vector<Letter> alphabet_of(WordView w);

}  // namespace strattr
