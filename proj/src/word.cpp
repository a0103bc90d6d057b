#include "strattr/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <map>
#include <unordered_set>

#include "strattr/error.hpp"

namespace strattr {

Letter letter_from_name(char name) {
  auto pos = kLetterNames.find(name);
  if (pos == std::string_view::npos) {
    throw ParseError(std::string("unknown letter name '") + name + "'");
  }
  return static_cast<Letter>(pos);
}

char letter_name(Letter a) {
  if (a >= kLetterNames.size()) {
    throw PreconditionError("letter code " + std::to_string(a) +
                            " has no printable name");
  }
  return kLetterNames[a];
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(letter_from_name(c));
  return w;
}

std::string to_string(WordView w) {
  std::string s;
  s.reserve(w.size());
  for (Letter a : w) s.push_back(letter_name(a));
  return s;
}

Word concat(WordView u, WordView v) {
  Word out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

FactorSet factors(WordView w, std::size_t n) {
  FactorSet out{n, {}};
  if (n > w.size()) return out;
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    auto block = w.subspan(i, n);
    if (seen.insert(as_key(block)).second) {
      out.factors.emplace(block.begin(), block.end());
    }
  }
  return out;
}

std::vector<std::size_t> periods(WordView w) {
  if (w.empty()) throw PreconditionError("empty word has no periods");
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p <= w.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < w.size() && ok; ++i) ok = w[i] == w[i + p];
    if (ok) out.push_back(p);
  }
  return out;
}

std::set<Word> SpecialFactors::bispecial() const {
  std::set<Word> out;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::inserter(out, out.begin()));
  return out;
}

SpecialFactors special_factors(const FactorSet& at_n, const FactorSet& at_n1) {
  if (at_n1.length != at_n.length + 1) {
    throw PreconditionError("special_factors needs samples at lengths n and n+1");
  }
  const std::size_t n = at_n.length;
  std::map<Word, std::set<Letter>> left_ext;
  std::map<Word, std::set<Letter>> right_ext;
  for (const Word& f : at_n1.factors) {
    Word suffix(f.begin() + 1, f.end());
    Word prefix(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));
    if (!at_n.contains(suffix) || !at_n.contains(prefix)) {
      throw PreconditionError("inconsistent sample: factor " + to_string(f) +
                              " has a length-" + std::to_string(n) +
                              " block missing from the shorter sample");
    }
    left_ext[suffix].insert(f.front());
    right_ext[prefix].insert(f.back());
  }
  SpecialFactors out;
  for (const auto& [u, ext] : left_ext) {
    if (ext.size() >= 2) out.left.insert(u);
  }
  for (const auto& [u, ext] : right_ext) {
    if (ext.size() >= 2) out.right.insert(u);
  }
  return out;
}

BalanceResult is_balanced(const FactorSet& sample) {
  std::set<Letter> letters;
  for (const Word& f : sample.factors) letters.insert(f.begin(), f.end());
  if (letters.size() > 2) {
    throw PreconditionError("is_balanced needs a binary alphabet, got " +
                            std::to_string(letters.size()) + " letters");
  }
  BalanceResult out;
  if (letters.empty()) return out;
  const Letter counted = *letters.begin();
  std::vector<std::pair<const Word*, std::ptrdiff_t>> counts;
  for (const Word& f : sample.factors) {
    counts.emplace_back(&f, std::count(f.begin(), f.end(), counted));
  }
  for (std::size_t a = 0; a < counts.size(); ++a) {
    for (std::size_t b = a + 1; b < counts.size(); ++b) {
      if (std::abs(counts[a].second - counts[b].second) > 1) {
        out.balanced = false;
        out.witness = std::make_pair(*counts[a].first, *counts[b].first);
        return out;
      }
    }
  }
  return out;
}

Word reversal(WordView w) { return Word(w.rbegin(), w.rend()); }

Word primitive_root(WordView w) {
  if (w.empty()) return {};
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < w.size() && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return slice(w, 0, d);
  }
  return Word(w.begin(), w.end());
}

bool are_conjugate(WordView u, WordView v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  Word uu = concat(u, u);
  return !occurrences(uu, v).empty();
}

std::vector<std::size_t> occurrences(WordView text, WordView pattern) {
  std::vector<std::size_t> out;
  if (pattern.empty() || pattern.size() > text.size()) return out;
  auto it = text.begin();
  while (true) {
    it = std::search(it, text.end(), pattern.begin(), pattern.end());
    if (it == text.end()) break;
    out.push_back(static_cast<std::size_t>(it - text.begin()));
    ++it;
  }
  return out;
}

std::vector<Letter> alphabet_of(WordView w) {
  std::set<Letter> s(w.begin(), w.end());
  return {s.begin(), s.end()};
}

}  // namespace strattr
