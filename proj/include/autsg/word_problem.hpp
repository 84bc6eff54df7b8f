#pragma once

// Equality of words in the semigroup generated by an automaton, element
// enumeration, zeros and periodicity, and the refutation procedure for claimed
// embeddings into the free monogenic semigroup with a zero adjoined.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "autsg/mealy.hpp"

namespace autsg {

/// An input that violates an operation's documented precondition.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

struct Equality {
  bool equal = false;
  /// Shortest, then lexicographically least, string on which the actions differ.
  std::optional<String> witness;
  /// Number of distinct pair configurations visited.
  std::size_t explored = 0;
};

/// Decides u = v by breadth-first search over the reachable pairs of state
/// tuples, rejecting at the first output mismatch.
Equality equal(const MealyAutomaton& a, const Word& u, const Word& v);

/// Incrementally sorts words into semigroup elements. A depth-d action
/// fingerprint buckets candidates; every bucket hit is settled by equal().
class WordClassifier {
 public:
  explicit WordClassifier(const MealyAutomaton& a, std::size_t initial_depth = 3);

  /// Class index of w, and whether w opened a new class.
  std::pair<std::size_t, bool> classify(const Word& w);
  /// Class index of w without inserting it.
  std::optional<std::size_t> find(const Word& w) const;

  const Word& representative(std::size_t cls) const { return representatives_.at(cls); }
  const std::vector<Word>& representatives() const noexcept { return representatives_; }
  std::size_t size() const noexcept { return representatives_.size(); }
  std::size_t depth() const noexcept { return depth_; }

 private:
  std::uint64_t fingerprint(const Word& w) const;
  std::size_t effective_depth(std::size_t depth) const;
  void rebuild(std::size_t depth);

  const MealyAutomaton& automaton_;
  std::size_t depth_;
  std::vector<Word> representatives_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

/// All words over {0..letters-1} of length 1..max_length, in shortlex order.
std::vector<Word> all_words(std::size_t letters, std::size_t max_length);

struct RestrictionCheck {
  bool pass = true;
  std::optional<String> failing_prefix;
};

/// For equal u, v: checks that u|_α = v|_α for every α of length at most
/// depth. Throws PreconditionError if u != v.
RestrictionCheck restrictions_respect_equality(const MealyAutomaton& a, const Word& u,
                                               const Word& v, std::size_t depth);

struct Ball {
  /// Shortlex-least word of each element reachable with words of length <= r.
  std::vector<Word> representatives;
  /// growth[k-1] = number of elements whose shortest word has length k.
  std::vector<std::size_t> growth;
};

Ball ball(const MealyAutomaton& a, std::size_t radius);

/// True iff wq = w and qw = w for every state q.
bool is_zero_element(const MealyAutomaton& a, const Word& w);

/// Power pattern iteration for a word whose sections are all either equal to
/// the word itself (flag set) or zero elements (flag clear). Returns verified
/// exponents m < n with w^m = w^n, or nothing if verification fails.
std::optional<std::pair<std::size_t, std::size_t>> periodic_from_pattern(
    const MealyAutomaton& a, const Word& w, const std::vector<bool>& self_sections,
    const std::vector<SymbolId>& root_map);

/// For a state q that recurses only to itself and a zero state z: exponents
/// m < n with q^m = q^n, verified by equal(). Throws PreconditionError naming
/// the failed hypothesis.
std::optional<std::pair<std::size_t, std::size_t>> periodic_by_recursion(const MealyAutomaton& a,
                                                                         StateId q, StateId z);

/// Upper bound 2^|B| * |B|^|B| + 1 on the exponent found by the pattern
/// iteration (saturating).
std::uint64_t periodicity_bound(std::size_t alphabet_size);

// ---------------------------------------------------------------------------
// Refutation of embeddings into N^0

/// Claimed value of each state: a positive natural, or nullopt for the zero.
using Valuation = std::vector<std::optional<std::uint64_t>>;

/// Sum of the values along w; nullopt (zero) if any letter is valued zero.
std::optional<std::uint64_t> valuation_sum(const Valuation& nu, const Word& w);

enum class RefutationKind { NotHom, Periodic, NoFiniteValues, Inconclusive };

std::string to_string(RefutationKind kind);

struct RefutationWitness {
  RefutationKind kind = RefutationKind::Inconclusive;
  /// NotHom: the pair {u, v}. Periodic: the single periodic word.
  std::vector<Word> words;
  /// NotHom: whether u = v holds. The pair always has equal() disagreeing
  /// with equality of the valuation sums.
  bool words_equal = false;
  std::optional<std::uint64_t> sum_u, sum_v;
  /// Periodic: m < n with w^m = w^n.
  std::size_t m = 0, n = 0;
  std::string diagnostic;
};

/// Searches words of length <= bound for a pair on which equality and the
/// valuation disagree (first equal pairs with different sums, then distinct
/// elements with the same sum).
std::optional<RefutationWitness> find_valuation_violation(const MealyAutomaton& a,
                                                          const Valuation& nu,
                                                          std::size_t bound = 3);

/// Runs the max/min wreath-recursion argument against the claim that nu is an
/// isomorphism from the generated semigroup onto a subsemigroup of N^0.
RefutationWitness refute_n0_valuation(const MealyAutomaton& a, const Valuation& nu);

}  // namespace autsg
