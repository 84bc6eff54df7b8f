#pragma once

// Finite semigroups given by Cayley tables, transformation closures, and the
// canonical automaton of a finite semigroup with a right zero.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autsg/mealy.hpp"

namespace autsg {

using Element = std::uint32_t;
using CayleyTable = std::vector<std::vector<Element>>;

/// (x, y, z) with (xy)z != x(yz).
using AssociativityDefect = std::array<Element, 3>;

/// Empty iff the table is square, in range and associative. A non-square or
/// out-of-range table yields a single defect {0, 0, 0}.
std::vector<AssociativityDefect> validate_semigroup(const CayleyTable& table);

/// Rows are the left factor: table[x][y] = xy.
class FiniteSemigroup {
 public:
  /// Throws InputError unless names are unique and the table is a semigroup.
  FiniteSemigroup(std::vector<std::string> names, CayleyTable table);

  std::size_t size() const noexcept { return names_.size(); }
  Element multiply(Element x, Element y) const { return table_[x][y]; }
  /// Product of a nonempty sequence of elements.
  Element product(const std::vector<Element>& xs) const;

  const std::string& name(Element x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const CayleyTable& table() const noexcept { return table_; }
  std::optional<Element> find(const std::string& name) const;
  Element element(const std::string& name) const;  // throws InputError

  friend bool operator==(const FiniteSemigroup&, const FiniteSemigroup&) = default;

 private:
  std::vector<std::string> names_;
  CayleyTable table_;
};

std::vector<Element> idempotents(const FiniteSemigroup& s);

struct DistinguishedElements {
  std::vector<Element> right_zeros;
  std::optional<Element> identity;
};

DistinguishedElements right_zeros_and_identity(const FiniteSemigroup& s);

/// A total self-map of {0, ..., m-1}.
struct Transformation {
  std::vector<std::uint32_t> image;

  static Transformation identity(std::size_t m);
  std::size_t domain_size() const noexcept { return image.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return image[x]; }

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;
};

/// Apply `first`, then `second`.
Transformation then(const Transformation& first, const Transformation& second);

/// Every product of generators (breadth first, in generator order), plus the
/// identity when `with_identity` is set. Throws InputError on mixed domains.
std::vector<Transformation> transformation_closure(const std::vector<Transformation>& generators,
                                                   bool with_identity);

/// Name of the adjoined identity symbol in finite_semigroup_automaton.
inline const std::string kAdjoinedOne = "1̄";

/// States S, alphabet S^1 written b̄; t on symbol b̄ goes to z and writes (bt)‾. Throws
/// InputError if z is not a right zero.
MealyAutomaton finite_semigroup_automaton(const FiniteSemigroup& s, Element z);

/// Assignment of a target element to every state of an automaton.
struct GeneratorHom {
  FiniteSemigroup target;
  std::vector<Element> image;  // indexed by StateId of the source automaton
};

struct HomVerdict {
  bool pass = true;
  std::size_t bound = 0;
  /// Equal words whose image products differ.
  std::optional<std::pair<Word, Word>> counterexample;
};

/// Bounded well-definedness check: every pair of equal words of length at most
/// `bound` must have equal image products. PASS is evidence up to the bound.
HomVerdict check_generator_hom(const GeneratorHom& hom, const MealyAutomaton& source,
                               std::size_t bound = 4);

}  // namespace autsg
