#pragma once

#include <map>
#include <string>
#include <vector>

#include "strattr/word.hpp"

namespace strattr {

// Non-erasing morphism given by its letter images.
class Substitution {
 public:
  Substitution() = default;
  // Throws PreconditionError when some image is empty or rules are empty.
  explicit Substitution(std::map<Letter, Word> rules);

  static Substitution L0();  // 0 -> 0, 1 -> 01
  static Substitution L1();  // 0 -> 10, 1 -> 1
  static Substitution identity(const std::vector<Letter>& alphabet);

  const std::map<Letter, Word>& rules() const { return rules_; }
  std::vector<Letter> domain() const;
  bool defined_on(Letter a) const { return rules_.count(a) != 0; }

  // Throws PreconditionError for a letter outside the domain.
  const Word& image(Letter a) const;
  Word apply(WordView w) const;
  std::size_t image_length(WordView w) const;
  std::size_t max_image_length() const;

  bool operator==(const Substitution&) const = default;

 private:
  std::map<Letter, Word> rules_;
};

// phi(0), phi(1) are not powers of one word. Binary domains only.
bool is_acyclic(const Substitution& phi);

struct ReturnCheck {
  Letter letter = 0;
  Word extended;  // w phi(a)
  std::vector<std::size_t> occurrences;
  bool ok = false;  // exactly two occurrences: prefix and suffix
};

struct ReturnMorphismCertificate {
  Word w;
  std::vector<ReturnCheck> checks;
  bool injective_on_letters = false;
  bool valid = false;
};

ReturnMorphismCertificate is_return_morphism(const Substitution& phi,
                                             WordView w);

}  // namespace strattr
