#pragma once

// Symbolic bi-infinite words with an exact window oracle.
//
// A BiWordSpec is an immutable value describing x in A^Z. Every window-
// computable spec answers window(spec, i, j) = x_i ... x_j exactly. The
// supported shapes are
//   * eventually periodic words  ^w u . c v^w   (c starts at index 0),
//   * characteristic Sturmian words built from a directive over {L0, L1},
//   * shifts S^m(x) with S(x)_i = x_{i+1},
//   * morphic images S^r(phi(x)) with phi(x_0) starting at index 0,
//   * declared orbit points: a symbolic, non-characteristic point of the
//     orbit closure of an inner word (language only, no windows).

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "strattr/morphism.hpp"
#include "strattr/word.hpp"

namespace strattr {

struct WorkCeiling {
  // Longest window or inner expansion that may be materialized.
  std::int64_t max_symbols = std::int64_t{1} << 26;
  // Largest radius the language stabilization may reach.
  std::int64_t max_radius = std::int64_t{1} << 20;
};

struct Window {
  Position offset = 0;
  Word content;

  Position first() const { return offset; }
  Position last() const { return offset + static_cast<Position>(content.size()) - 1; }
  std::size_t size() const { return content.size(); }
  bool covers(Position i, Position j) const { return i >= first() && j <= last(); }
  Letter at(Position p) const;
  // Letters at positions [i, j] in ambient coordinates.
  Word sub(Position i, Position j) const;
  WordView view(Position i, Position j) const;
  Window restrict(Position i, Position j) const { return {i, sub(i, j)}; }

  bool operator==(const Window&) const = default;
};

enum class Variant { upper, lower };

const char* to_string(Variant v);

// Infinite directive a_0 a_1 ... = head tail tail tail ...
class DirectiveSequence {
 public:
  // tail must be nonempty and contain both letters 0 and 1.
  DirectiveSequence(Word head, Word tail);

  const Word& head() const { return head_; }
  const Word& tail() const { return tail_; }
  Letter at(std::size_t i) const;
  // Directive a_1 a_2 ... (tail rotated once the head is exhausted).
  DirectiveSequence drop_first() const;

  bool operator==(const DirectiveSequence&) const = default;

 private:
  Word head_;
  Word tail_;
};

namespace detail {
class CharacteristicExpansion;
}

class BiWordSpec;

struct EventuallyPeriodic {
  Word left;
  Word center;
  Word right;

  Letter at(Position n) const;
  bool operator==(const EventuallyPeriodic&) const = default;
};

struct CharacteristicSturmian {
  DirectiveSequence directive;
  Variant variant;
  std::shared_ptr<const detail::CharacteristicExpansion> expansion;
};

struct Shifted {
  std::shared_ptr<const BiWordSpec> inner;
  Position m = 0;
};

struct MorphicImage {
  std::shared_ptr<const BiWordSpec> inner;
  Substitution phi;
  Position residue = 0;
};

struct OrbitPoint {
  std::shared_ptr<const BiWordSpec> inner;
};

class BiWordSpec {
 public:
  using Node = std::variant<EventuallyPeriodic, CharacteristicSturmian, Shifted,
                            MorphicImage, OrbitPoint>;

  static BiWordSpec eventually_periodic(Word left, Word center, Word right);
  static BiWordSpec characteristic(DirectiveSequence directive, Variant variant);
  static BiWordSpec shifted(const BiWordSpec& inner, Position m);
  // Throws PreconditionError unless 0 <= residue < |phi(inner_0)|.
  static BiWordSpec image(const BiWordSpec& inner, Substitution phi,
                          Position residue = 0);
  static BiWordSpec orbit_point(const BiWordSpec& inner);

  const Node& node() const { return *node_; }
  template <class T>
  const T* as() const {
    return std::get_if<T>(node_.get());
  }

  // False only for specs containing a declared orbit point.
  bool window_computable() const;

 private:
  explicit BiWordSpec(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}
  std::shared_ptr<const Node> node_;
};

bool operator==(const BiWordSpec& a, const BiWordSpec& b);

// x_[i, j]. Throws PreconditionError when i > j, ResourceError past the
// ceiling and SymbolicError on orbit points.
Window window(const BiWordSpec& spec, Position i, Position j,
              const WorkCeiling& ceiling = {});

// Length-n prefix of the one-sided limit word of the directive, i.e. l_n.
Word left_special_prefix(const DirectiveSequence& d, std::size_t n,
                         const WorkCeiling& ceiling = {});

// Window [-n, n+1] assembled as reversal(l_n) . 01|10 . l_n.
Window char_window(const DirectiveSequence& d, Variant variant, std::size_t n,
                   const WorkCeiling& ceiling = {});

// The spec rewritten as S^shift(base) with base eventually periodic, when the
// spec is built from an eventually periodic word by shifts and images.
struct ReducedPeriodic {
  EventuallyPeriodic base;
  Position shift = 0;
};
std::optional<ReducedPeriodic> reduce_to_eventually_periodic(const BiWordSpec& spec);

// x_n = x_{n+p} for n >= i (p minimal, i least) and x_n = x_{n-q} for n <= j
// (q minimal, j greatest).
struct PeriodicStructure {
  Position i = 0;
  std::size_t p = 0;
  Position j = 0;
  std::size_t q = 0;
  bool operator==(const PeriodicStructure&) const = default;
};
struct PurelyPeriodic {
  std::size_t period = 0;
  bool operator==(const PurelyPeriodic&) const = default;
};
using Normalization = std::variant<PeriodicStructure, PurelyPeriodic>;

// Throws PreconditionError when the spec does not reduce to an eventually
// periodic word.
Normalization normalize_eventually_periodic(const BiWordSpec& spec);

// Factors of lengths 0..max_length read off window(-radius, radius) once the
// counts stopped changing over two consecutive radius doublings.
struct LanguageSample {
  Position radius = 0;
  Window window;
  std::size_t max_length = 0;
  std::vector<std::size_t> counts;  // counts[n], n = 0..max_length

  FactorSet factors(std::size_t n) const;
};

LanguageSample sample_language(const BiWordSpec& spec, std::size_t max_length,
                               Position start_radius = 0,
                               const WorkCeiling& ceiling = {});

struct ComplexityProfile {
  std::vector<std::size_t> counts;  // counts[n-1] = p(n), n = 1..N
  Position radius = 0;

  std::size_t at(std::size_t n) const { return counts.at(n - 1); }
};

ComplexityProfile factor_complexity_profile(const BiWordSpec& spec, std::size_t N,
                                            Position radius,
                                            const WorkCeiling& ceiling = {});

// The spec whose windows define the language: orbit points defer to their
// generator, which shares the language of its (minimal) orbit closure.
const BiWordSpec& language_source(const BiWordSpec& spec);

}  // namespace strattr
