#include <set>

#include "autsg/constructions.hpp"
#include "autsg/word_problem.hpp"
#include "text.hpp"

namespace autsg {

MealyAutomaton rees_matrix(const ReesSpec& spec) {
  const MealyAutomaton& a = spec.a;
  require_valid(a);
  const std::size_t ni = spec.i_names.size();
  const std::size_t nl = spec.lambda_names.size();
  if (ni == 0 || nl == 0) throw InputError("index sets must be nonempty");
  if (spec.identity >= a.num_states()) throw InputError("identity state out of range");
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!equal(a, Word{spec.identity, q}, Word{q}).equal ||
        !equal(a, Word{q, spec.identity}, Word{q}).equal) {
      throw InputError("'" + a.state_name(spec.identity) + "' is not an identity for '" +
                       a.state_name(q) + "'");
    }
  }
  if (spec.p.size() != nl) throw InputError("sandwich matrix needs one row per lambda");
  bool has_identity = false;
  for (const auto& row : spec.p) {
    if (row.size() != ni) throw InputError("sandwich matrix needs one column per i");
    for (StateId x : row) {
      if (x >= a.num_states()) throw InputError("sandwich matrix entry out of range");
      has_identity = has_identity || x == spec.identity;
    }
  }
  if (!has_identity) throw InputError("sandwich matrix does not contain the identity");

  // entry * x as a state, by claim (verified) or trivially for the identity.
  std::map<std::pair<StateId, StateId>, StateId> product;
  for (const auto& row : spec.p) {
    for (StateId entry : row) {
      for (StateId x = 0; x < a.num_states(); ++x) {
        if (product.count({entry, x})) continue;
        if (entry == spec.identity) {
          product[{entry, x}] = x;
          continue;
        }
        auto it = spec.left_mult.find({entry, x});
        if (it == spec.left_mult.end()) {
          throw InputError("missing left-multiplication claim for (" + a.state_name(entry) + ", " +
                           a.state_name(x) + ")");
        }
        if (it->second >= a.num_states() || !equal(a, Word{entry, x}, Word{it->second}).equal) {
          throw InputError("left-multiplication claim (" + a.state_name(entry) + ", " +
                           a.state_name(x) + ") -> " +
                           (it->second < a.num_states() ? a.state_name(it->second) : "?") +
                           " is false");
        }
        product[{entry, x}] = it->second;
      }
    }
  }

  std::set<std::string> taken(spec.i_names.begin(), spec.i_names.end());
  const std::string tag = detail::fresh_name("e", taken);
  const std::size_t nq = a.num_states();
  std::vector<std::string> states;
  for (std::size_t i = 0; i < ni; ++i) {
    for (StateId x = 0; x < nq; ++x) {
      for (std::size_t l = 0; l < nl; ++l) {
        states.push_back("(" + spec.i_names[i] + "," + a.state_name(x) + "," + spec.lambda_names[l] +
                         ")");
      }
    }
  }
  std::vector<std::string> symbols = a.symbol_names();
  const auto tag_base = static_cast<SymbolId>(symbols.size());
  for (std::size_t l = 0; l < nl; ++l) symbols.push_back("(" + tag + "," + spec.lambda_names[l] + ")");
  const auto pair_base = static_cast<SymbolId>(symbols.size());
  for (std::size_t i = 0; i < ni; ++i) {
    for (std::size_t l = 0; l < nl; ++l) {
      symbols.push_back("(" + spec.i_names[i] + "," + spec.lambda_names[l] + ")");
    }
  }
  std::set<std::string> seen;
  for (const auto& s : symbols) {
    if (!seen.insert(s).second) throw InputError("symbol name clash on '" + s + "'");
  }

  auto state = [&](std::size_t i, StateId x, std::size_t l) {
    return static_cast<StateId>((i * nq + x) * nl + l);
  };
  MealyAutomaton r(std::move(states), std::move(symbols));
  for (std::size_t j = 0; j < ni; ++j) {
    for (StateId x = 0; x < nq; ++x) {
      for (std::size_t mu = 0; mu < nl; ++mu) {
        const StateId q = state(j, x, mu);
        for (SymbolId b = 0; b < a.num_symbols(); ++b) {
          r.set_transition(q, b, state(0, a.next(x, b), 0), a.out(x, b));
        }
        for (std::size_t l = 0; l < nl; ++l) {
          r.set_transition(q, tag_base + static_cast<SymbolId>(l), state(0, x, 0),
                           pair_base + static_cast<SymbolId>(j * nl + mu));
          for (std::size_t i = 0; i < ni; ++i) {
            r.set_transition(q, pair_base + static_cast<SymbolId>(i * nl + l),
                             state(0, product.at({spec.p[l][j], x}), 0),
                             pair_base + static_cast<SymbolId>(i * nl + mu));
          }
        }
      }
    }
  }
  return r;
}

}  // namespace autsg
