#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "autsg/io.hpp"
#include "autsg/word_problem.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(AUTSG_FIXTURES) + "/" + name; }

inline autsg::MealyAutomaton load_automaton(const std::string& name) {
  return autsg::parse_automaton(autsg::read_file(fixture(name)));
}

inline autsg::FiniteSemigroup load_semigroup(const std::string& name) {
  return autsg::parse_semigroup(autsg::read_file(fixture(name)));
}

inline autsg::Word random_word(std::mt19937& rng, std::size_t letters, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(1, max_length);
  std::uniform_int_distribution<autsg::StateId> letter(0, static_cast<autsg::StateId>(letters - 1));
  std::vector<autsg::StateId> w(len(rng));
  for (auto& x : w) x = letter(rng);
  return autsg::Word(std::move(w));
}

/// Brute-force comparison of the actions of u and v on every string of
/// length <= depth. Literal enumeration while the count stays small, then
/// layer by layer over the sets of state tuples reached at each length.
inline bool actions_agree(const autsg::MealyAutomaton& a, const autsg::Word& u, const autsg::Word& v,
                          std::size_t depth) {
  using autsg::StateId;
  using autsg::SymbolId;
  const std::size_t nb = a.num_symbols();
  std::size_t literal = 0;
  for (std::size_t total = nb; literal < depth && total <= 4096; total *= nb) ++literal;
  std::vector<SymbolId> s;
  for (std::size_t n = 1; n <= literal; ++n) {
    s.assign(n, 0);
    while (true) {
      if (autsg::act(a, u, s) != autsg::act(a, v, s)) return false;
      std::size_t i = n;
      while (i > 0 && s[i - 1] + 1 == nb) s[--i] = 0;
      if (i == 0) break;
      ++s[i - 1];
    }
  }
  // Tuples reached after each length; outputs on the next symbol depend only on them.
  using Config = std::pair<std::vector<StateId>, std::vector<StateId>>;
  std::set<Config> layer{{u.letters(), v.letters()}};
  auto step = [&](std::vector<StateId> tuple, SymbolId b, SymbolId& out) {
    for (auto& q : tuple) {
      const StateId to = a.next(q, b);
      b = a.out(q, b);
      q = to;
    }
    out = b;
    return tuple;
  };
  for (std::size_t n = 0; n < depth; ++n) {
    std::set<Config> next;
    for (const auto& [x, y] : layer) {
      for (SymbolId b = 0; b < nb; ++b) {
        SymbolId ox = 0, oy = 0;
        auto nx = step(x, b, ox);
        auto ny = step(y, b, oy);
        if (ox != oy) return false;
        next.emplace(std::move(nx), std::move(ny));
      }
    }
    if (next == layer) break;
    layer = std::move(next);
  }
  return true;
}

}  // namespace testing
