#pragma once

// Mealy automata (synchronous deterministic transducers) and the actions of
// their states and words on finite and eventually periodic strings.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace autsg {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

inline constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

/// Raised for malformed input: unknown names, bad files, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite string over an automaton's alphabet.
using String = std::vector<SymbolId>;

/// A nonempty word over the states of one automaton; denotes an element of
/// the generated semigroup.
class Word {
 public:
  explicit Word(std::vector<StateId> letters);
  Word(std::initializer_list<StateId> letters);

  const std::vector<StateId>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  StateId operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<StateId> letters_;
};

Word operator+(const Word& u, const Word& v);
/// w^n for n >= 1.
Word power(const Word& w, std::size_t n);
/// Shorter words first, then lexicographic by state index.
bool shortlex_less(const Word& u, const Word& v);

class MealyAutomaton {
 public:
  /// All transition cells start unset; fill them with set_transition.
  MealyAutomaton(std::vector<std::string> states, std::vector<std::string> symbols);

  /// Stores the cell verbatim; out-of-range values are reported by validate().
  void set_transition(StateId q, SymbolId b, StateId to, SymbolId output);

  std::size_t num_states() const noexcept { return state_names_.size(); }
  std::size_t num_symbols() const noexcept { return symbol_names_.size(); }

  StateId next(StateId q, SymbolId b) const { return next_[cell(q, b)]; }
  SymbolId out(StateId q, SymbolId b) const { return out_[cell(q, b)]; }

  const std::string& state_name(StateId q) const { return state_names_.at(q); }
  const std::string& symbol_name(SymbolId b) const { return symbol_names_.at(b); }
  const std::vector<std::string>& state_names() const noexcept { return state_names_; }
  const std::vector<std::string>& symbol_names() const noexcept { return symbol_names_; }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;
  StateId state(std::string_view name) const;    // throws InputError
  SymbolId symbol(std::string_view name) const;  // throws InputError

  friend bool operator==(const MealyAutomaton& a, const MealyAutomaton& b) {
    return a.state_names_ == b.state_names_ && a.symbol_names_ == b.symbol_names_ &&
           a.next_ == b.next_ && a.out_ == b.out_;
  }

 private:
  std::size_t cell(StateId q, SymbolId b) const {
    return static_cast<std::size_t>(q) * symbol_names_.size() + b;
  }

  std::vector<std::string> state_names_;
  std::vector<std::string> symbol_names_;
  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, SymbolId> symbol_index_;
  // Two flat tables, row-major by state.
  std::vector<StateId> next_;
  std::vector<SymbolId> out_;
};

struct Defect {
  StateId state;
  SymbolId symbol;
  std::string message;
};

/// Empty iff both tables are total and every stored index is in range.
std::vector<Defect> validate(const MealyAutomaton& a);
/// Throws InputError describing the first defect, if any.
void require_valid(const MealyAutomaton& a);

// Name-level helpers. Tokens are separated by whitespace.
Word parse_word(const MealyAutomaton& a, std::string_view text);
String parse_string(const MealyAutomaton& a, std::string_view text);
std::string format_word(const MealyAutomaton& a, const Word& w);
std::string format_string(const MealyAutomaton& a, std::span<const SymbolId> s);

/// Sequential transduction of s by each letter of w in turn.
String act(const MealyAutomaton& a, const Word& w, std::span<const SymbolId> s);

/// The word w|_prefix: for every b, act(w, prefix b) = act(w, prefix) act(w|_prefix, b).
Word restriction(const MealyAutomaton& a, const Word& w, std::span<const SymbolId> prefix);

/// First-level decomposition of a word: its action on single symbols plus the
/// section word below each symbol.
struct WreathRecursion {
  std::vector<SymbolId> root_map;
  std::vector<Word> sections;
  std::size_t length = 0;

  friend bool operator==(const WreathRecursion&, const WreathRecursion&) = default;
};

WreathRecursion wreath_recursion(const MealyAutomaton& a, const Word& w);
/// Product of recursions: sections(b) = r1.sections(b) r2.sections(r1.root_map(b)).
WreathRecursion compose_recursions(const WreathRecursion& r1, const WreathRecursion& r2);

/// prefix · period^ω.
struct EventuallyPeriodicString {
  String prefix;
  String period;

  /// Reduces the period to its primitive root and then absorbs as much of the
  /// prefix tail into the period as possible. Two canonical values are equal
  /// iff they denote the same infinite string.
  EventuallyPeriodicString canonical() const;
  /// First n symbols of the infinite string.
  String unroll(std::size_t n) const;

  friend bool operator==(const EventuallyPeriodicString&,
                         const EventuallyPeriodicString&) = default;
};

/// Exact image of prefix·period^ω under w, returned in canonical form.
EventuallyPeriodicString act_eventually_periodic(const MealyAutomaton& a, const Word& w,
                                                 const EventuallyPeriodicString& input);

struct Minimization {
  MealyAutomaton automaton;
  /// Old state id -> new state id.
  std::vector<StateId> class_of;
};

/// Quotient by behavioural equivalence (Moore partition refinement). Each class
/// keeps the name of its lowest-indexed member.
Minimization minimize(const MealyAutomaton& a);

struct Isomorphism {
  std::vector<StateId> state_map;    // a1 state -> a2 state
  std::vector<SymbolId> symbol_map;  // a1 symbol -> a2 symbol
};

/// Deterministic backtracking search for a pair of bijections commuting with
/// next and out. Shared names are tried first.
std::optional<Isomorphism> isomorphic(const MealyAutomaton& a1, const MealyAutomaton& a2);

/// DOT digraph, one edge per (state, symbol) labelled "in|out".
std::string export_dot(const MealyAutomaton& a);

}  // namespace autsg
