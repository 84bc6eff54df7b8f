#include <algorithm>
#include <set>

#include "autsg/constructions.hpp"
#include "autsg/word_problem.hpp"
#include "text.hpp"

namespace autsg {

namespace {

constexpr const char* kBar = "\u0304";

std::string word_text(const MealyAutomaton& a, const Word& w) { return "'" + format_word(a, w) + "'"; }

void check_ideal_tables(const IdealExtensionSpec& spec) {
  const MealyAutomaton& a = spec.a1;
  const FiniteSemigroup& s = spec.s2;
  require_valid(a);
  if (spec.z >= s.size()) throw InputError("zero element out of range");
  for (Element x = 0; x < s.size(); ++x) {
    if (s.multiply(x, spec.z) != spec.z) throw InputError("'" + s.name(spec.z) + "' is not a right zero");
  }
  if (spec.left.size() != a.num_states()) throw InputError("left action must cover every state");
  for (const auto& row : spec.left) {
    if (row.size() != s.size()) throw InputError("left action must cover every element");
    for (Element y : row) {
      if (y >= s.size()) throw InputError("left action value out of range");
    }
  }
  if (spec.right.size() != s.size()) throw InputError("right action must cover every element");
  for (const auto& row : spec.right) {
    if (row.size() != a.num_states()) throw InputError("right action must cover every state");
    for (Element y : row) {
      if (y >= s.size()) throw InputError("right action value out of range");
    }
  }

  // Mixed associativity over S2.
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        const std::string at = " fails for '" + a.state_name(q) + "', '" + s.name(x) + "', '" +
                               s.name(y) + "'";
        if (spec.left[q][s.multiply(x, y)] != s.multiply(spec.left[q][x], y)) {
          throw InputError("q(xy) = (qx)y" + at);
        }
        if (spec.right[s.multiply(x, y)][q] != s.multiply(x, spec.right[y][q])) {
          throw InputError("(xy)q = x(yq)" + at);
        }
        if (s.multiply(spec.right[x][q], y) != s.multiply(x, spec.left[q][y])) {
          throw InputError("(xq)y = x(qy)" + at);
        }
      }
    }
  }

  // Equal words must induce the same actions on S2.
  auto left_of = [&](const Word& w) {
    Transformation t = Transformation::identity(s.size());
    for (std::size_t i = w.size(); i-- > 0;) {
      for (auto& y : t.image) y = spec.left[w[i]][y];
    }
    return t;
  };
  auto right_of = [&](const Word& w) {
    Transformation t = Transformation::identity(s.size());
    for (StateId q : w) {
      for (auto& y : t.image) y = spec.right[y][q];
    }
    return t;
  };
  WordClassifier classifier(a);
  std::vector<std::pair<Transformation, Transformation>> induced;
  for (const Word& w : all_words(a.num_states(), spec.bound)) {
    const auto [cls, fresh] = classifier.classify(w);
    auto actions = std::make_pair(left_of(w), right_of(w));
    if (fresh) {
      induced.push_back(std::move(actions));
    } else if (induced[cls] != actions) {
      throw InputError("actions are not compatible: " + word_text(a, w) + " = " +
                       word_text(a, classifier.representative(cls)) +
                       " but they act differently on the ideal");
    }
  }
}

}  // namespace

std::vector<Transformation> ideal_extension_lambdas(const IdealExtensionSpec& spec) {
  std::vector<Transformation> generators;
  for (const auto& row : spec.left) generators.push_back(Transformation{row});
  if (generators.empty()) return {Transformation::identity(spec.s2.size())};
  return transformation_closure(generators, true);
}

MealyAutomaton ideal_extension(const IdealExtensionSpec& spec) {
  check_ideal_tables(spec);
  const MealyAutomaton& a = spec.a1;
  const FiniteSemigroup& s = spec.s2;
  const std::vector<Transformation> lambdas = ideal_extension_lambdas(spec);
  std::map<Transformation, std::size_t> lambda_index;
  std::vector<std::string> lambda_names;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    lambda_index.emplace(lambdas[i], i);
    if (lambdas[i] == Transformation::identity(s.size())) {
      lambda_names.push_back("id");
    } else {
      std::string name = "<";
      for (std::size_t j = 0; j < lambdas[i].image.size(); ++j) {
        if (j) name += ',';
        name += s.name(lambdas[i].image[j]);
      }
      lambda_names.push_back(name + ">");
    }
  }

  const std::size_t na = a.num_symbols();
  const std::size_t nl = lambdas.size();
  std::vector<std::string> symbols;
  for (SymbolId b = 0; b < na; ++b) {
    for (std::size_t m = 0; m < nl; ++m) symbols.push_back("(" + a.symbol_name(b) + "," + lambda_names[m] + ")");
  }
  const auto bar_base = static_cast<SymbolId>(symbols.size());
  for (const auto& n : s.names()) symbols.push_back(n + kBar);

  std::vector<std::string> states = a.state_names();
  std::set<std::string> taken(states.begin(), states.end());
  const auto y_base = static_cast<StateId>(states.size());
  for (const auto& n : s.names()) {
    states.push_back(detail::fresh_name(n, taken));
    taken.insert(states.back());
  }
  const StateId z = y_base + spec.z;

  auto pair_symbol = [&](SymbolId b, std::size_t m) { return static_cast<SymbolId>(b * nl + m); };
  MealyAutomaton r(std::move(states), std::move(symbols));
  for (StateId x = 0; x < a.num_states(); ++x) {
    const Transformation lambda_x{spec.left[x]};
    for (SymbolId b = 0; b < na; ++b) {
      for (std::size_t m = 0; m < nl; ++m) {
        // (μλ_x)(y) = μ(x·y)
        const std::size_t composed = lambda_index.at(then(lambda_x, lambdas[m]));
        r.set_transition(x, pair_symbol(b, m), a.next(x, b), pair_symbol(a.out(x, b), composed));
      }
    }
    for (Element y = 0; y < s.size(); ++y) {
      r.set_transition(x, bar_base + y, z, bar_base + spec.right[y][x]);
    }
  }
  for (Element y = 0; y < s.size(); ++y) {
    for (SymbolId b = 0; b < na; ++b) {
      for (std::size_t m = 0; m < nl; ++m) {
        r.set_transition(y_base + y, pair_symbol(b, m), z, bar_base + lambdas[m](y));
      }
    }
    for (Element c = 0; c < s.size(); ++c) {
      r.set_transition(y_base + y, bar_base + c, z, bar_base + s.multiply(c, y));
    }
  }
  return r;
}

MealyAutomaton act_extension(const ActExtensionSpec& spec) {
  const MealyAutomaton& a = spec.a;
  require_valid(a);
  const std::size_t nx = spec.points.size();
  if (nx == 0) throw InputError("the point set must be nonempty");
  if (spec.action.size() != a.num_states()) throw InputError("action must cover every state");
  for (const auto& row : spec.action) {
    if (row.size() != nx) throw InputError("action must cover every point");
    for (auto x : row) {
      if (x >= nx) throw InputError("action value out of range");
    }
  }
  auto act_of = [&](const Word& w) {
    Transformation t = Transformation::identity(nx);
    for (StateId q : w) {
      for (auto& x : t.image) x = spec.action[q][x];
    }
    return t;
  };
  WordClassifier classifier(a);
  std::vector<Transformation> induced;
  for (const Word& w : all_words(a.num_states(), spec.bound)) {
    const auto [cls, fresh] = classifier.classify(w);
    if (fresh) {
      induced.push_back(act_of(w));
    } else if (induced[cls] != act_of(w)) {
      throw InputError("action is not well defined: " + word_text(a, w) + " = " +
                       word_text(a, classifier.representative(cls)) + " but they move points differently");
    }
  }

  std::vector<std::string> states = a.state_names();
  std::set<std::string> state_taken(states.begin(), states.end());
  std::vector<std::string> symbols = a.symbol_names();
  std::set<std::string> symbol_taken(symbols.begin(), symbols.end());
  for (const auto& p : spec.points) {
    states.push_back(detail::fresh_name(p, state_taken));
    state_taken.insert(states.back());
    symbols.push_back(detail::fresh_name(p, symbol_taken));
    symbol_taken.insert(symbols.back());
  }
  const auto x_state = static_cast<StateId>(a.num_states());
  const auto x_symbol = static_cast<SymbolId>(a.num_symbols());
  MealyAutomaton r(std::move(states), std::move(symbols));
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (SymbolId b = 0; b < a.num_symbols(); ++b) r.set_transition(q, b, a.next(q, b), a.out(q, b));
    for (std::uint32_t x = 0; x < nx; ++x) {
      const std::uint32_t image = spec.action[q][x];
      r.set_transition(q, x_symbol + x, x_state + image, x_symbol + image);
    }
  }
  for (std::uint32_t x = 0; x < nx; ++x) {
    for (SymbolId c = 0; c < r.num_symbols(); ++c) r.set_transition(x_state + x, c, x_state + x, x_symbol + x);
  }
  return r;
}

}  // namespace autsg
