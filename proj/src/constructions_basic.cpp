#include <algorithm>
#include <set>

#include "autsg/constructions.hpp"
#include "text.hpp"

namespace autsg {

namespace {

std::string tuple_name(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s + ")";
}

}  // namespace

MealyAutomaton adjoin_identity(const MealyAutomaton& a) {
  require_valid(a);
  std::set<std::string> taken(a.state_names().begin(), a.state_names().end());
  auto states = a.state_names();
  states.push_back(detail::fresh_name("1", taken));
  MealyAutomaton r(std::move(states), a.symbol_names());
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (SymbolId b = 0; b < a.num_symbols(); ++b) r.set_transition(q, b, a.next(q, b), a.out(q, b));
  }
  const auto one = static_cast<StateId>(a.num_states());
  for (SymbolId b = 0; b < a.num_symbols(); ++b) r.set_transition(one, b, one, b);
  return r;
}

MealyAutomaton adjoin_zero(const MealyAutomaton& a) {
  require_valid(a);
  std::set<std::string> state_taken(a.state_names().begin(), a.state_names().end());
  std::set<std::string> symbol_taken(a.symbol_names().begin(), a.symbol_names().end());
  auto states = a.state_names();
  states.push_back(detail::fresh_name("z", state_taken));
  auto symbols = a.symbol_names();
  symbols.push_back(detail::fresh_name(kZeroSymbol, symbol_taken));
  MealyAutomaton r(std::move(states), std::move(symbols));
  const auto z = static_cast<StateId>(a.num_states());
  const auto zero = static_cast<SymbolId>(a.num_symbols());
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (SymbolId b = 0; b < a.num_symbols(); ++b) r.set_transition(q, b, a.next(q, b), a.out(q, b));
    r.set_transition(q, zero, q, zero);
  }
  for (SymbolId b = 0; b <= zero; ++b) r.set_transition(z, b, z, zero);
  return r;
}

MealyAutomaton direct_product(const MealyAutomaton& a1, const MealyAutomaton& a2) {
  require_valid(a1);
  require_valid(a2);
  std::vector<std::string> states, symbols;
  for (const auto& p : a1.state_names()) {
    for (const auto& q : a2.state_names()) states.push_back(tuple_name({p, q}));
  }
  for (const auto& x : a1.symbol_names()) {
    for (const auto& y : a2.symbol_names()) symbols.push_back(tuple_name({x, y}));
  }
  MealyAutomaton r(std::move(states), std::move(symbols));
  const auto n2 = static_cast<StateId>(a2.num_states());
  const auto m2 = static_cast<SymbolId>(a2.num_symbols());
  for (StateId p = 0; p < a1.num_states(); ++p) {
    for (StateId q = 0; q < n2; ++q) {
      for (SymbolId x = 0; x < a1.num_symbols(); ++x) {
        for (SymbolId y = 0; y < m2; ++y) {
          r.set_transition(p * n2 + q, x * m2 + y, a1.next(p, x) * n2 + a2.next(q, y),
                           a1.out(p, x) * m2 + a2.out(q, y));
        }
      }
    }
  }
  return r;
}

MealyAutomaton direct_power(const MealyAutomaton& a, std::size_t n) {
  require_valid(a);
  if (n == 0) throw InputError("direct power needs n >= 1");
  const std::size_t nq = a.num_states();
  const std::size_t nb = a.num_symbols();

  auto digits = [n](std::size_t index, std::size_t base) {
    std::vector<std::uint32_t> d(n);
    for (std::size_t i = n; i-- > 0;) {
      d[i] = static_cast<std::uint32_t>(index % base);
      index /= base;
    }
    return d;
  };
  auto count = [n](std::size_t base) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (c > (std::size_t{1} << 24) / std::max<std::size_t>(base, 1)) {
        throw InputError("direct power is too large");
      }
      c *= base;
    }
    return c;
  };
  const std::size_t num_states = count(nq);
  const std::size_t num_symbols = count(nb);

  std::vector<std::string> states, symbols;
  for (std::size_t i = 0; i < num_states; ++i) {
    std::vector<std::string> parts;
    for (auto d : digits(i, nq)) parts.push_back(a.state_name(d));
    states.push_back(tuple_name(parts));
  }
  for (std::size_t i = 0; i < num_symbols; ++i) {
    std::vector<std::string> parts;
    for (auto d : digits(i, nb)) parts.push_back(a.symbol_name(d));
    symbols.push_back(tuple_name(parts));
  }
  MealyAutomaton r(std::move(states), std::move(symbols));
  for (std::size_t i = 0; i < num_states; ++i) {
    const auto qs = digits(i, nq);
    for (std::size_t j = 0; j < num_symbols; ++j) {
      const auto bs = digits(j, nb);
      std::size_t to = 0, out = 0;
      for (std::size_t k = 0; k < n; ++k) {
        to = to * nq + a.next(qs[k], bs[k]);
        out = out * nb + a.out(qs[k], bs[k]);
      }
      r.set_transition(static_cast<StateId>(i), static_cast<SymbolId>(j), static_cast<StateId>(to),
                       static_cast<SymbolId>(out));
    }
  }
  return r;
}

std::optional<StateId> find_identity_state(const MealyAutomaton& a) {
  for (StateId q = 0; q < a.num_states(); ++q) {
    bool identity = true;
    for (SymbolId b = 0; b < a.num_symbols() && identity; ++b) {
      identity = a.next(q, b) == q && a.out(q, b) == b;
    }
    if (identity) return q;
  }
  return std::nullopt;
}

IdentityPrepared ensure_identity(const MealyAutomaton& a, std::optional<StateId> hint) {
  require_valid(a);
  if (hint) {
    if (*hint >= a.num_states()) throw InputError("identity state out of range");
    // Acts as the identity iff every state reachable from it copies its input.
    std::vector<bool> seen(a.num_states());
    std::vector<StateId> stack{*hint};
    seen[*hint] = true;
    while (!stack.empty()) {
      const StateId q = stack.back();
      stack.pop_back();
      for (SymbolId b = 0; b < a.num_symbols(); ++b) {
        if (a.out(q, b) != b) {
          throw InputError("state '" + a.state_name(*hint) + "' does not act as the identity");
        }
        if (!seen[a.next(q, b)]) {
          seen[a.next(q, b)] = true;
          stack.push_back(a.next(q, b));
        }
      }
    }
    return {a, *hint, false};
  }
  if (auto q = find_identity_state(a)) return {a, *q, false};
  return {adjoin_identity(a), static_cast<StateId>(a.num_states()), true};
}

}  // namespace autsg
