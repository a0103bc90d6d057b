#include "strattr/morphism.hpp"

#include <algorithm>
#include <set>

#include "strattr/error.hpp"

namespace strattr {

Substitution::Substitution(std::map<Letter, Word> rules) : rules_(std::move(rules)) {
  if (rules_.empty()) throw PreconditionError("substitution has no rules");
  for (const auto& [a, img] : rules_) {
    if (img.empty()) {
      throw PreconditionError(std::string("erasing rule for letter '") +
                              letter_name(a) + "'");
    }
  }
}

Substitution Substitution::L0() { return Substitution({{0, {0}}, {1, {0, 1}}}); }

Substitution Substitution::L1() { return Substitution({{0, {1, 0}}, {1, {1}}}); }

Substitution Substitution::identity(const std::vector<Letter>& alphabet) {
  std::map<Letter, Word> rules;
  for (Letter a : alphabet) rules[a] = Word{a};
  return Substitution(std::move(rules));
}

std::vector<Letter> Substitution::domain() const {
  std::vector<Letter> out;
  for (const auto& kv : rules_) out.push_back(kv.first);
  return out;
}

const Word& Substitution::image(Letter a) const {
  auto it = rules_.find(a);
  if (it == rules_.end()) {
    throw PreconditionError(std::string("substitution undefined on letter '") +
                            letter_name(a) + "'");
  }
  return it->second;
}

Word Substitution::apply(WordView w) const {
  Word out;
  out.reserve(w.size() * max_image_length());
  for (Letter a : w) {
    const Word& img = image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

std::size_t Substitution::image_length(WordView w) const {
  std::size_t n = 0;
  for (Letter a : w) n += image(a).size();
  return n;
}

std::size_t Substitution::max_image_length() const {
  std::size_t m = 0;
  for (const auto& kv : rules_) m = std::max(m, kv.second.size());
  return m;
}

bool is_acyclic(const Substitution& phi) {
  if (phi.rules().size() != 2) {
    throw PreconditionError("is_acyclic needs a binary domain");
  }
  auto it = phi.rules().begin();
  const Word& a = it->second;
  const Word& b = std::next(it)->second;
  return primitive_root(a) != primitive_root(b);
}

ReturnMorphismCertificate is_return_morphism(const Substitution& phi, WordView w) {
  ReturnMorphismCertificate cert;
  cert.w.assign(w.begin(), w.end());
  std::set<Word> images;
  for (const auto& [a, img] : phi.rules()) images.insert(img);
  cert.injective_on_letters = images.size() == phi.rules().size();

  bool all_ok = !w.empty();
  for (const auto& [a, img] : phi.rules()) {
    ReturnCheck check;
    check.letter = a;
    check.extended = concat(w, img);
    check.occurrences = occurrences(check.extended, w);
    check.ok = !w.empty() && check.occurrences.size() == 2 &&
               check.occurrences.front() == 0 &&
               check.occurrences.back() == check.extended.size() - w.size();
    all_ok = all_ok && check.ok;
    cert.checks.push_back(std::move(check));
  }
  cert.valid = all_ok && cert.injective_on_letters;
  return cert;
}

}  // namespace strattr
