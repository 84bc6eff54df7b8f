#include <set>

#include "autsg/constructions.hpp"
#include "text.hpp"

namespace autsg {

MealyAutomaton strong_semilattice(const SemilatticeSpec& spec) {
  const FiniteSemigroup& t = spec.t;
  const std::size_t k = spec.parts.size();
  if (k == 0) throw InputError("a strong semilattice needs at least one part");
  if (spec.z >= t.size()) throw InputError("zero element out of range");
  for (Element x = 0; x < t.size(); ++x) {
    if (t.multiply(x, spec.z) != spec.z) throw InputError("'" + t.name(spec.z) + "' is not a right zero");
  }
  if (spec.homs.size() != k) throw InputError("one homomorphism per part is required");
  for (std::size_t i = 0; i < k; ++i) {
    require_valid(spec.parts[i]);
    GeneratorHom hom{t, spec.homs[i]};
    const HomVerdict verdict = check_generator_hom(hom, spec.parts[i], spec.hom_bound);
    if (!verdict.pass) {
      const auto& [u, v] = *verdict.counterexample;
      throw InputError("homomorphism of part " + std::to_string(i + 1) + " is not well defined: " +
                       format_word(spec.parts[i], u) + " = " + format_word(spec.parts[i], v) +
                       " but their images differ");
    }
  }

  // B is T itself when T is a monoid, else T with an adjoined 1̄.
  const bool adjoin_one = !right_zeros_and_identity(t).identity.has_value();
  std::vector<std::string> b_names = t.names();
  std::set<std::string> taken(b_names.begin(), b_names.end());
  if (adjoin_one) b_names.push_back(detail::fresh_name(kAdjoinedOne, taken));
  for (const auto& part : spec.parts) taken.insert(part.symbol_names().begin(), part.symbol_names().end());
  const std::string pad = detail::fresh_name("0", taken);
  const std::size_t nb = b_names.size();
  // b·x in T^1, with index t.size() standing for the adjoined 1.
  auto times = [&](std::size_t b, Element x) -> std::size_t {
    return b == t.size() ? x : t.multiply(static_cast<Element>(b), x);
  };

  // Symbol index: mixed radix over (|A_1|+1, ..., |A_k|+1, |B|), first slot
  // most significant; digit 0 of a slot is the pad.
  std::vector<std::size_t> radix;
  for (const auto& part : spec.parts) radix.push_back(part.num_symbols() + 1);
  radix.push_back(nb);
  std::size_t num_symbols = 1;
  for (auto r : radix) {
    if (num_symbols > (std::size_t{1} << 22) / r) throw InputError("alphabet is too large");
    num_symbols *= r;
  }
  auto decode = [&](std::size_t index) {
    std::vector<std::size_t> d(radix.size());
    for (std::size_t i = radix.size(); i-- > 0;) {
      d[i] = index % radix[i];
      index /= radix[i];
    }
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) index = index * radix[i] + d[i];
    return static_cast<SymbolId>(index);
  };

  std::vector<std::string> symbols;
  for (std::size_t c = 0; c < num_symbols; ++c) {
    const auto d = decode(c);
    std::string name = "(";
    for (std::size_t i = 0; i < k; ++i) {
      name += d[i] == 0 ? pad : spec.parts[i].symbol_name(static_cast<SymbolId>(d[i] - 1));
      name += ',';
    }
    symbols.push_back(name + b_names[d[k]] + ")");
  }

  std::vector<std::string> states;
  std::set<std::string> state_taken;
  std::vector<StateId> offset;
  for (const auto& part : spec.parts) {
    offset.push_back(static_cast<StateId>(states.size()));
    for (const auto& n : part.state_names()) {
      states.push_back(detail::fresh_name(n, state_taken));
      state_taken.insert(states.back());
    }
  }
  const auto p_base = static_cast<StateId>(states.size());
  for (const auto& n : t.names()) {
    states.push_back(detail::fresh_name(n, state_taken));
    state_taken.insert(states.back());
  }
  const StateId z = p_base + spec.z;

  MealyAutomaton r(std::move(states), std::move(symbols));
  for (std::size_t c = 0; c < num_symbols; ++c) {
    const auto d = decode(c);
    const auto sym = static_cast<SymbolId>(c);
    for (Element p = 0; p < t.size(); ++p) {
      std::vector<std::size_t> out(k + 1, 0);
      out[k] = times(d[k], p);
      r.set_transition(p_base + p, sym, z, encode(out));
    }
    for (std::size_t i = 0; i < k; ++i) {
      const MealyAutomaton& part = spec.parts[i];
      for (StateId q = 0; q < part.num_states(); ++q) {
        std::vector<std::size_t> out(k + 1, 0);
        out[k] = times(d[k], spec.homs[i][q]);
        StateId to = z;
        if (d[i] != 0) {
          const auto a = static_cast<SymbolId>(d[i] - 1);
          out[i] = part.out(q, a) + 1;
          to = offset[i] + part.next(q, a);
        }
        r.set_transition(offset[i] + q, sym, to, encode(out));
      }
    }
  }
  return r;
}

}  // namespace autsg
