#include "autsg/constructions.hpp"

namespace autsg {

BuiltAutomaton wreath_product(const WreathSpec& spec) {
  const FiniteSemigroup& t = spec.t;
  const auto one = right_zeros_and_identity(t).identity;
  if (!one) throw InputError("the top semigroup must be a monoid");
  IdentityPrepared prepared = ensure_identity(spec.a, spec.identity);
  BuiltAutomaton built{MealyAutomaton({}, {}), true, {}};
  if (prepared.adjoined) {
    built.notes.push_back("identity state adjoined; the result realizes S^1 wr T");
  }
  const std::size_t n = t.size();
  const MealyAutomaton power = direct_power(prepared.automaton, n);
  const std::size_t np = prepared.automaton.num_states();

  // Tuple index <-> coordinates, first coordinate most significant.
  auto decode = [n](std::size_t index, std::size_t base) {
    std::vector<std::uint32_t> d(n);
    for (std::size_t i = n; i-- > 0;) {
      d[i] = static_cast<std::uint32_t>(index % base);
      index /= base;
    }
    return d;
  };
  auto encode = [](const std::vector<std::uint32_t>& d, std::size_t base) {
    std::size_t index = 0;
    for (auto x : d) index = index * base + x;
    return index;
  };

  std::vector<std::string> states, symbols;
  for (StateId s = 0; s < power.num_states(); ++s) {
    for (Element u = 0; u < n; ++u) states.push_back("(" + power.state_name(s) + "," + t.name(u) + ")");
  }
  for (SymbolId a = 0; a < power.num_symbols(); ++a) {
    for (Element b = 0; b < n; ++b) symbols.push_back("(" + power.symbol_name(a) + "," + t.name(b) + ")");
  }
  MealyAutomaton w(std::move(states), std::move(symbols));
  for (StateId s = 0; s < power.num_states(); ++s) {
    const auto coords = decode(s, np);
    for (Element b = 0; b < n; ++b) {
      // s^b: coordinate i takes the value at index t_i b.
      std::vector<std::uint32_t> twisted(n);
      for (Element i = 0; i < n; ++i) twisted[i] = coords[t.multiply(i, b)];
      const auto sb = static_cast<StateId>(encode(twisted, np));
      for (SymbolId a = 0; a < power.num_symbols(); ++a) {
        const StateId to = power.next(sb, a) * n + *one;
        for (Element u = 0; u < n; ++u) {
          w.set_transition(static_cast<StateId>(s * n + u), static_cast<SymbolId>(a * n + b), to,
                           static_cast<SymbolId>(power.out(sb, a) * n + t.multiply(b, u)));
        }
      }
    }
  }
  built.automaton = std::move(w);
  return built;
}

}  // namespace autsg
