#pragma once

// Builders turning semigroup constructions into concrete Mealy automata.
// Every builder checks its hypotheses first and throws InputError when one
// fails.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autsg/finite_algebra.hpp"
#include "autsg/mealy.hpp"

namespace autsg {

/// An automaton together with the hypotheses that could not be checked.
struct BuiltAutomaton {
  MealyAutomaton automaton;
  bool verified = true;
  std::vector<std::string> notes;
};

/// New state "1" fixing every symbol.
MealyAutomaton adjoin_identity(const MealyAutomaton& a);

/// Name of the symbol added by adjoin_zero.
inline const std::string kZeroSymbol = "0̂";

/// New symbol 0̂ and state z: z writes 0̂ forever, old states copy 0̂.
MealyAutomaton adjoin_zero(const MealyAutomaton& a);

/// States and symbols are pairs "(p,q)", "(a,b)"; componentwise transitions.
MealyAutomaton direct_product(const MealyAutomaton& a1, const MealyAutomaton& a2);

/// n-fold product with flat tuple names "(x1,...,xn)". The first coordinate
/// varies slowest in the state and symbol order.
MealyAutomaton direct_power(const MealyAutomaton& a, std::size_t n);

/// A state that loops on every symbol and copies it, if any.
std::optional<StateId> find_identity_state(const MealyAutomaton& a);

struct IdentityPrepared {
  MealyAutomaton automaton;
  StateId identity;
  bool adjoined;
};

/// Uses `hint` (checked to act as the identity), else an existing identity
/// state, else adjoins one.
IdentityPrepared ensure_identity(const MealyAutomaton& a, std::optional<StateId> hint);

// ---------------------------------------------------------------------------
// Free products

struct FreeProductFiniteSpec {
  FiniteSemigroup s;
  FiniteSemigroup t;
  Element e;  // idempotent of s
  Element f;  // idempotent of t
};

/// Decoded free-product symbol. Dominoes carry (s above, t below), tablets
/// (t above, s below); a missing part is the blank "-".
struct FreeProductSymbol {
  enum class Kind { Domino, Tablet } kind;
  std::optional<Element> s;
  std::optional<Element> t;
  bool circled = false;
};

/// Alphabet of free_product_finite in order: D[-|-], D[a|-], D[a|b], D[a|b]o,
/// then T[-|-], T[b|-], T[b|a], T[b|a]o.
std::vector<FreeProductSymbol> free_product_finite_symbols(const FreeProductFiniteSpec& spec);
std::string free_product_symbol_name(const FreeProductFiniteSpec& spec, const FreeProductSymbol& x);

/// States: the elements of s, then those of t (primed on clashes).
MealyAutomaton free_product_finite(const FreeProductFiniteSpec& spec);

enum class HypothesisMode { IdempotentVerified, Asserted };

struct FreeProductGeneralSpec {
  MealyAutomaton a1;
  MealyAutomaton a2;
  StateId e;  // state of a1
  StateId f;  // state of a2
  HypothesisMode mode = HypothesisMode::IdempotentVerified;
};

/// States: those of a1, then those of a2. Symbols: dominoes D[a|b], tablets
/// T[b|a] with marks "^S", "^T", "o", and the gates $, $^, $-, $o, #, #^, #-, #o.
BuiltAutomaton free_product_general(const FreeProductGeneralSpec& spec);

// ---------------------------------------------------------------------------

struct WreathSpec {
  MealyAutomaton a;                  // automaton for the monoid S
  std::optional<StateId> identity;  // designated identity state of a
  FiniteSemigroup t;                 // finite monoid T
};

/// States "((s1,...,sn),t)" over P = states of a (plus an identity if one was
/// adjoined) and t in T; symbols "((a1,...,an),b)". Tuple coordinates follow
/// the element order of T; the tuple varies slowest.
BuiltAutomaton wreath_product(const WreathSpec& spec);

struct ReesSpec {
  MealyAutomaton a;  // automaton for the monoid M
  StateId identity;
  std::vector<std::string> i_names;
  std::vector<std::string> lambda_names;
  /// p[lambda][i], each a state of a.
  std::vector<std::vector<StateId>> p;
  /// Claimed products (entry, x) -> y with entry·x = y.
  std::map<std::pair<StateId, StateId>, StateId> left_mult;
};

/// States "(i,x,λ)" with i outermost; symbols: those of a, then "(e,λ)", then
/// "(i,λ)".
MealyAutomaton rees_matrix(const ReesSpec& spec);

struct SemilatticeSpec {
  std::vector<MealyAutomaton> parts;
  FiniteSemigroup t;
  Element z;  // right zero of t
  /// homs[i][q]: image of state q of part i.
  std::vector<std::vector<Element>> homs;
  std::size_t hom_bound = 4;
};

/// States: all part states in order, then the elements of t. Symbols
/// "(a1,...,ak,b)" with pad "0"; b ranges over t, plus 1̄ if t has no identity.
MealyAutomaton strong_semilattice(const SemilatticeSpec& spec);

struct IdealExtensionSpec {
  MealyAutomaton a1;
  FiniteSemigroup s2;
  Element z;  // right zero of s2
  /// left[q][y] = q·y
  std::vector<std::vector<Element>> left;
  /// right[y][q] = y·q
  std::vector<std::vector<Element>> right;
  std::size_t bound = 3;
};

/// The transformations λ_w of s2 for words w over a1, plus the identity, in
/// breadth-first order starting with the identity.
std::vector<Transformation> ideal_extension_lambdas(const IdealExtensionSpec& spec);

/// States: a1's, then the elements of s2. Symbols "(a,μ)" for a in a1's
/// alphabet and μ in the lambdas ("id" or "<images>"), then b̄ for b in s2.
MealyAutomaton ideal_extension(const IdealExtensionSpec& spec);

struct ActExtensionSpec {
  MealyAutomaton a;
  std::vector<std::string> points;
  /// action[q][x] = x^q
  std::vector<std::vector<std::uint32_t>> action;
  std::size_t bound = 3;
};

/// States: a's, then the points. Symbols: a's, then the points.
MealyAutomaton act_extension(const ActExtensionSpec& spec);

}  // namespace autsg
