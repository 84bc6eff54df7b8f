#include "autsg/mealy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "text.hpp"

namespace autsg {

namespace detail {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::string token;
    if (text[i] == '"') {
      ++i;
      bool closed = false;
      while (i < text.size()) {
        char c = text[i++];
        if (c == '\\' && i < text.size()) {
          token += text[i++];
        } else if (c == '"') {
          closed = true;
          break;
        } else {
          token += c;
        }
      }
      if (!closed) throw InputError("unterminated quoted token");
    } else {
      while (i < text.size() && !is_space(text[i])) token += text[i++];
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::string quote_if_needed(std::string_view token) {
  bool needs = token.empty() || token.front() == '"' || token.front() == '#';
  for (char c : token) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') needs = true;
  }
  if (!needs) return std::string(token);
  std::string quoted = "\"";
  for (char c : token) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Word

Word::Word(std::vector<StateId> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InputError("empty word: semigroup elements need at least one letter");
}

Word::Word(std::initializer_list<StateId> letters) : Word(std::vector<StateId>(letters)) {}

Word operator+(const Word& u, const Word& v) {
  std::vector<StateId> letters(u.letters());
  letters.insert(letters.end(), v.begin(), v.end());
  return Word(std::move(letters));
}

Word power(const Word& w, std::size_t n) {
  if (n == 0) throw InputError("word power needs a positive exponent");
  std::vector<StateId> letters;
  letters.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) letters.insert(letters.end(), w.begin(), w.end());
  return Word(std::move(letters));
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u.letters() < v.letters();
}

// ---------------------------------------------------------------------------
// MealyAutomaton

MealyAutomaton::MealyAutomaton(std::vector<std::string> states, std::vector<std::string> symbols)
    : state_names_(std::move(states)),
      symbol_names_(std::move(symbols)),
      next_(state_names_.size() * symbol_names_.size(), kUnset),
      out_(state_names_.size() * symbol_names_.size(), kUnset) {
  for (StateId q = 0; q < state_names_.size(); ++q) {
    if (!state_index_.emplace(state_names_[q], q).second) {
      throw InputError("duplicate state name '" + state_names_[q] + "'");
    }
  }
  for (SymbolId b = 0; b < symbol_names_.size(); ++b) {
    if (!symbol_index_.emplace(symbol_names_[b], b).second) {
      throw InputError("duplicate symbol name '" + symbol_names_[b] + "'");
    }
  }
}

void MealyAutomaton::set_transition(StateId q, SymbolId b, StateId to, SymbolId output) {
  if (q >= num_states() || b >= num_symbols()) {
    throw InputError("transition source cell out of range");
  }
  next_[cell(q, b)] = to;
  out_[cell(q, b)] = output;
}

std::optional<StateId> MealyAutomaton::find_state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SymbolId> MealyAutomaton::find_symbol(std::string_view name) const {
  auto it = symbol_index_.find(std::string(name));
  if (it == symbol_index_.end()) return std::nullopt;
  return it->second;
}

StateId MealyAutomaton::state(std::string_view name) const {
  if (auto q = find_state(name)) return *q;
  throw InputError("unknown state '" + std::string(name) + "'");
}

SymbolId MealyAutomaton::symbol(std::string_view name) const {
  if (auto b = find_symbol(name)) return *b;
  throw InputError("unknown symbol '" + std::string(name) + "'");
}

std::vector<Defect> validate(const MealyAutomaton& a) {
  std::vector<Defect> defects;
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (SymbolId b = 0; b < a.num_symbols(); ++b) {
      const StateId to = a.next(q, b);
      const SymbolId o = a.out(q, b);
      const std::string where = "(" + a.state_name(q) + ", " + a.symbol_name(b) + ")";
      if (to == kUnset || o == kUnset) {
        defects.push_back({q, b, "missing transition " + where});
      } else if (to >= a.num_states()) {
        defects.push_back({q, b, "target state out of range at " + where});
      } else if (o >= a.num_symbols()) {
        defects.push_back({q, b, "output symbol out of range at " + where});
      }
    }
  }
  return defects;
}

void require_valid(const MealyAutomaton& a) {
  auto defects = validate(a);
  if (!defects.empty()) throw InputError(defects.front().message);
}

Word parse_word(const MealyAutomaton& a, std::string_view text) {
  std::vector<StateId> letters;
  for (const auto& token : detail::tokenize(text)) letters.push_back(a.state(token));
  return Word(std::move(letters));
}

String parse_string(const MealyAutomaton& a, std::string_view text) {
  String s;
  for (const auto& token : detail::tokenize(text)) s.push_back(a.symbol(token));
  return s;
}

std::string format_word(const MealyAutomaton& a, const Word& w) {
  std::string text;
  for (StateId q : w) {
    if (!text.empty()) text += ' ';
    text += detail::quote_if_needed(a.state_name(q));
  }
  return text;
}

std::string format_string(const MealyAutomaton& a, std::span<const SymbolId> s) {
  std::string text;
  for (SymbolId b : s) {
    if (!text.empty()) text += ' ';
    text += detail::quote_if_needed(a.symbol_name(b));
  }
  return text;
}

// ---------------------------------------------------------------------------
// Actions

namespace {

void check_symbols(const MealyAutomaton& a, std::span<const SymbolId> s) {
  for (SymbolId b : s) {
    if (b >= a.num_symbols()) throw InputError("unknown symbol id " + std::to_string(b));
  }
}

void check_word(const MealyAutomaton& a, const Word& w) {
  for (StateId q : w) {
    if (q >= a.num_states()) throw InputError("unknown state id " + std::to_string(q));
  }
}

// Pushes one symbol through the chain of transducers whose current states are
// `states`, updating them; returns the final output symbol.
SymbolId step_chain(const MealyAutomaton& a, std::vector<StateId>& states, SymbolId b) {
  for (auto& q : states) {
    const SymbolId o = a.out(q, b);
    q = a.next(q, b);
    b = o;
  }
  return b;
}

}  // namespace

String act(const MealyAutomaton& a, const Word& w, std::span<const SymbolId> s) {
  check_word(a, w);
  check_symbols(a, s);
  std::vector<StateId> states(w.begin(), w.end());
  String result;
  result.reserve(s.size());
  for (SymbolId b : s) result.push_back(step_chain(a, states, b));
  return result;
}

Word restriction(const MealyAutomaton& a, const Word& w, std::span<const SymbolId> prefix) {
  check_word(a, w);
  check_symbols(a, prefix);
  std::vector<StateId> states(w.begin(), w.end());
  for (SymbolId b : prefix) step_chain(a, states, b);
  return Word(std::move(states));
}

WreathRecursion wreath_recursion(const MealyAutomaton& a, const Word& w) {
  check_word(a, w);
  WreathRecursion r;
  r.length = w.size();
  for (SymbolId b = 0; b < a.num_symbols(); ++b) {
    std::vector<StateId> states(w.begin(), w.end());
    r.root_map.push_back(step_chain(a, states, b));
    r.sections.emplace_back(std::move(states));
  }
  return r;
}

WreathRecursion compose_recursions(const WreathRecursion& r1, const WreathRecursion& r2) {
  if (r1.root_map.size() != r2.root_map.size()) {
    throw InputError("cannot compose wreath recursions over different alphabets");
  }
  WreathRecursion r;
  r.length = r1.length + r2.length;
  for (SymbolId b = 0; b < r1.root_map.size(); ++b) {
    const SymbolId image = r1.root_map[b];
    r.root_map.push_back(r2.root_map[image]);
    r.sections.push_back(r1.sections[b] + r2.sections[image]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Eventually periodic strings

EventuallyPeriodicString EventuallyPeriodicString::canonical() const {
  if (period.empty()) throw InputError("eventually periodic string needs a nonempty period");
  EventuallyPeriodicString c{prefix, period};
  const std::size_t n = c.period.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = c.period[i] == c.period[i - d];
    if (repeats) {
      c.period.resize(d);
      break;
    }
  }
  while (!c.prefix.empty() && c.prefix.back() == c.period.back()) {
    std::rotate(c.period.rbegin(), c.period.rbegin() + 1, c.period.rend());
    c.prefix.pop_back();
  }
  return c;
}

String EventuallyPeriodicString::unroll(std::size_t n) const {
  if (period.empty()) throw InputError("eventually periodic string needs a nonempty period");
  String s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.push_back(i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()]);
  }
  return s;
}

EventuallyPeriodicString act_eventually_periodic(const MealyAutomaton& a, const Word& w,
                                                 const EventuallyPeriodicString& input) {
  check_word(a, w);
  check_symbols(a, input.prefix);
  check_symbols(a, input.period);
  if (input.period.empty()) throw InputError("eventually periodic string needs a nonempty period");

  std::vector<StateId> states(w.begin(), w.end());
  EventuallyPeriodicString result;
  for (SymbolId b : input.prefix) result.prefix.push_back(step_chain(a, states, b));

  // The chain's state tuple at the start of a period determines everything
  // that follows, so the output repeats from the first revisited tuple.
  std::map<std::vector<StateId>, std::size_t> seen;
  std::vector<String> blocks;
  while (seen.find(states) == seen.end()) {
    seen.emplace(states, blocks.size());
    String block;
    for (SymbolId b : input.period) block.push_back(step_chain(a, states, b));
    blocks.push_back(std::move(block));
  }
  const std::size_t cycle_start = seen.at(states);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto& target = i < cycle_start ? result.prefix : result.period;
    target.insert(target.end(), blocks[i].begin(), blocks[i].end());
  }
  return result.canonical();
}

// ---------------------------------------------------------------------------
// Minimization

Minimization minimize(const MealyAutomaton& a) {
  require_valid(a);
  const std::size_t nq = a.num_states();
  const std::size_t nb = a.num_symbols();

  // Classes are numbered by first appearance, so class ids follow the
  // lowest-indexed member.
  auto renumber = [nq](const std::function<std::vector<std::uint32_t>(StateId)>& signature) {
    std::map<std::vector<std::uint32_t>, StateId> ids;
    std::vector<StateId> cls(nq);
    for (StateId q = 0; q < nq; ++q) {
      auto [it, inserted] = ids.emplace(signature(q), static_cast<StateId>(ids.size()));
      cls[q] = it->second;
    }
    return std::make_pair(cls, ids.size());
  };

  auto [cls, count] = renumber([&](StateId q) {
    std::vector<std::uint32_t> sig;
    for (SymbolId b = 0; b < nb; ++b) sig.push_back(a.out(q, b));
    return sig;
  });
  while (true) {
    auto [refined, refined_count] = renumber([&, &cls = cls](StateId q) {
      std::vector<std::uint32_t> sig{cls[q]};
      for (SymbolId b = 0; b < nb; ++b) sig.push_back(cls[a.next(q, b)]);
      return sig;
    });
    const bool stable = refined_count == count;
    cls = std::move(refined);
    count = refined_count;
    if (stable) break;
  }

  std::vector<StateId> representative(count, kUnset);
  std::vector<std::string> names(count);
  for (StateId q = 0; q < nq; ++q) {
    if (representative[cls[q]] == kUnset) {
      representative[cls[q]] = q;
      names[cls[q]] = a.state_name(q);
    }
  }
  MealyAutomaton m(std::move(names), a.symbol_names());
  for (StateId c = 0; c < count; ++c) {
    for (SymbolId b = 0; b < nb; ++b) {
      m.set_transition(c, b, cls[a.next(representative[c], b)], a.out(representative[c], b));
    }
  }
  return {std::move(m), std::move(cls)};
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct IsoSearch {
  const MealyAutomaton& a1;
  const MealyAutomaton& a2;
  std::vector<std::vector<std::uint32_t>> state_sig1, state_sig2, symbol_sig1, symbol_sig2;

  struct Partial {
    std::vector<StateId> smap, sinv;
    std::vector<SymbolId> bmap, binv;
  };

  static std::vector<std::uint32_t> state_signature(const MealyAutomaton& a, StateId q) {
    std::uint32_t loops = 0, fixed = 0;
    std::set<StateId> targets;
    std::set<SymbolId> outputs;
    for (SymbolId b = 0; b < a.num_symbols(); ++b) {
      loops += a.next(q, b) == q;
      fixed += a.out(q, b) == b;
      targets.insert(a.next(q, b));
      outputs.insert(a.out(q, b));
    }
    return {loops, fixed, static_cast<std::uint32_t>(targets.size()),
            static_cast<std::uint32_t>(outputs.size())};
  }

  static std::vector<std::uint32_t> symbol_signature(const MealyAutomaton& a, SymbolId b) {
    std::uint32_t loops = 0, fixed = 0;
    std::set<StateId> targets;
    std::set<SymbolId> outputs;
    for (StateId q = 0; q < a.num_states(); ++q) {
      loops += a.next(q, b) == q;
      fixed += a.out(q, b) == b;
      targets.insert(a.next(q, b));
      outputs.insert(a.out(q, b));
    }
    return {loops, fixed, static_cast<std::uint32_t>(targets.size()),
            static_cast<std::uint32_t>(outputs.size())};
  }

  IsoSearch(const MealyAutomaton& x, const MealyAutomaton& y) : a1(x), a2(y) {
    for (StateId q = 0; q < a1.num_states(); ++q) state_sig1.push_back(state_signature(a1, q));
    for (StateId q = 0; q < a2.num_states(); ++q) state_sig2.push_back(state_signature(a2, q));
    for (SymbolId b = 0; b < a1.num_symbols(); ++b) symbol_sig1.push_back(symbol_signature(a1, b));
    for (SymbolId b = 0; b < a2.num_symbols(); ++b) symbol_sig2.push_back(symbol_signature(a2, b));
  }

  bool bind_state(Partial& p, StateId q1, StateId q2, bool& changed) const {
    if (p.smap[q1] != kUnset) return p.smap[q1] == q2;
    if (p.sinv[q2] != kUnset || state_sig1[q1] != state_sig2[q2]) return false;
    p.smap[q1] = q2;
    p.sinv[q2] = q1;
    changed = true;
    return true;
  }

  bool bind_symbol(Partial& p, SymbolId b1, SymbolId b2, bool& changed) const {
    if (p.bmap[b1] != kUnset) return p.bmap[b1] == b2;
    if (p.binv[b2] != kUnset || symbol_sig1[b1] != symbol_sig2[b2]) return false;
    p.bmap[b1] = b2;
    p.binv[b2] = b1;
    changed = true;
    return true;
  }

  // Forces every consequence of the current partial bijections.
  bool propagate(Partial& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (StateId q1 = 0; q1 < a1.num_states(); ++q1) {
        if (p.smap[q1] == kUnset) continue;
        for (SymbolId b1 = 0; b1 < a1.num_symbols(); ++b1) {
          if (p.bmap[b1] == kUnset) continue;
          const StateId q2 = p.smap[q1];
          const SymbolId b2 = p.bmap[b1];
          if (!bind_state(p, a1.next(q1, b1), a2.next(q2, b2), changed)) return false;
          if (!bind_symbol(p, a1.out(q1, b1), a2.out(q2, b2), changed)) return false;
        }
      }
    }
    return true;
  }

  template <typename NameOf>
  static std::vector<std::uint32_t> candidates(std::size_t count, const std::string& name,
                                               NameOf name_of) {
    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 0; c < count; ++c) {
      if (name_of(c) == name) order.push_back(c);
    }
    for (std::uint32_t c = 0; c < count; ++c) {
      if (name_of(c) != name) order.push_back(c);
    }
    return order;
  }

  std::optional<Partial> search(Partial p) const {
    if (!propagate(p)) return std::nullopt;
    const bool any_state = std::any_of(p.smap.begin(), p.smap.end(),
                                       [](StateId q) { return q != kUnset; });
    auto first_unset = [](const auto& v) {
      return static_cast<std::uint32_t>(std::find(v.begin(), v.end(), kUnset) - v.begin());
    };
    const std::uint32_t free_state = first_unset(p.smap);
    const std::uint32_t free_symbol = first_unset(p.bmap);
    const bool states_done = free_state == p.smap.size();
    const bool symbols_done = free_symbol == p.bmap.size();
    if (states_done && symbols_done) return p;

    const bool branch_on_state = !states_done && (!any_state || symbols_done);
    if (branch_on_state) {
      for (StateId q2 : candidates(a2.num_states(), a1.state_name(free_state),
                                   [&](std::uint32_t c) -> const std::string& { return a2.state_name(c); })) {
        Partial next = p;
        bool changed = false;
        if (!bind_state(next, free_state, q2, changed)) continue;
        if (auto found = search(std::move(next))) return found;
      }
    } else {
      for (SymbolId b2 : candidates(a2.num_symbols(), a1.symbol_name(free_symbol),
                                    [&](std::uint32_t c) -> const std::string& { return a2.symbol_name(c); })) {
        Partial next = p;
        bool changed = false;
        if (!bind_symbol(next, free_symbol, b2, changed)) continue;
        if (auto found = search(std::move(next))) return found;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Isomorphism> isomorphic(const MealyAutomaton& a1, const MealyAutomaton& a2) {
  require_valid(a1);
  require_valid(a2);
  if (a1.num_states() != a2.num_states() || a1.num_symbols() != a2.num_symbols()) {
    return std::nullopt;
  }
  IsoSearch search(a1, a2);
  IsoSearch::Partial start{std::vector<StateId>(a1.num_states(), kUnset),
                           std::vector<StateId>(a1.num_states(), kUnset),
                           std::vector<SymbolId>(a1.num_symbols(), kUnset),
                           std::vector<SymbolId>(a1.num_symbols(), kUnset)};
  auto found = search.search(std::move(start));
  if (!found) return std::nullopt;

  Isomorphism iso{found->smap, found->bmap};
  for (StateId q = 0; q < a1.num_states(); ++q) {
    for (SymbolId b = 0; b < a1.num_symbols(); ++b) {
      if (a2.next(iso.state_map[q], iso.symbol_map[b]) != iso.state_map[a1.next(q, b)] ||
          a2.out(iso.state_map[q], iso.symbol_map[b]) != iso.symbol_map[a1.out(q, b)]) {
        return std::nullopt;
      }
    }
  }
  return iso;
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string dot_escape(std::string_view s) {
  std::string escaped;
  for (char c : s) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += c;
  }
  return escaped;
}

}  // namespace

std::string export_dot(const MealyAutomaton& a) {
  require_valid(a);
  std::ostringstream dot;
  dot << "digraph mealy {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    dot << "  q" << q << " [label=\"" << dot_escape(a.state_name(q)) << "\"];\n";
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (SymbolId b = 0; b < a.num_symbols(); ++b) {
      dot << "  q" << q << " -> q" << a.next(q, b) << " [label=\""
          << dot_escape(a.symbol_name(b) + "|" + a.symbol_name(a.out(q, b))) << "\"];\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace autsg
