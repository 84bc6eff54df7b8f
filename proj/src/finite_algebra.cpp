#include "autsg/finite_algebra.hpp"

#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "autsg/word_problem.hpp"
#include "text.hpp"

namespace autsg {

std::vector<AssociativityDefect> validate_semigroup(const CayleyTable& table) {
  const std::size_t n = table.size();
  for (const auto& row : table) {
    if (row.size() != n) return {{0, 0, 0}};
    for (Element x : row) {
      if (x >= n) return {{0, 0, 0}};
    }
  }
  std::vector<AssociativityDefect> defects;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (table[table[x][y]][z] != table[x][table[y][z]]) defects.push_back({x, y, z});
      }
    }
  }
  return defects;
}

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> names, CayleyTable table)
    : names_(std::move(names)), table_(std::move(table)) {
  if (names_.empty()) throw InputError("a semigroup needs at least one element");
  if (table_.size() != names_.size()) throw InputError("Cayley table size does not match names");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw InputError("duplicate element name '" + n + "'");
  }
  auto defects = validate_semigroup(table_);
  if (!defects.empty()) {
    const auto& d = defects.front();
    if (d == AssociativityDefect{0, 0, 0} && table_[0].size() != names_.size()) {
      throw InputError("Cayley table is not square");
    }
    throw InputError("Cayley table is not associative at (" + names_.at(d[0]) + ", " +
                     names_.at(d[1]) + ", " + names_.at(d[2]) + ")");
  }
}

Element FiniteSemigroup::product(const std::vector<Element>& xs) const {
  if (xs.empty()) throw InputError("empty product in a semigroup");
  Element p = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) p = multiply(p, xs[i]);
  return p;
}

std::optional<Element> FiniteSemigroup::find(const std::string& name) const {
  for (Element x = 0; x < names_.size(); ++x) {
    if (names_[x] == name) return x;
  }
  return std::nullopt;
}

Element FiniteSemigroup::element(const std::string& name) const {
  if (auto x = find(name)) return *x;
  throw InputError("unknown element '" + name + "'");
}

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  std::vector<Element> result;
  for (Element x = 0; x < s.size(); ++x) {
    if (s.multiply(x, x) == x) result.push_back(x);
  }
  return result;
}

DistinguishedElements right_zeros_and_identity(const FiniteSemigroup& s) {
  DistinguishedElements d;
  for (Element z = 0; z < s.size(); ++z) {
    bool right_zero = true;
    bool identity = true;
    for (Element x = 0; x < s.size(); ++x) {
      right_zero = right_zero && s.multiply(x, z) == z;
      identity = identity && s.multiply(z, x) == x && s.multiply(x, z) == x;
    }
    if (right_zero) d.right_zeros.push_back(z);
    if (identity && !d.identity) d.identity = z;
  }
  return d;
}

Transformation Transformation::identity(std::size_t m) {
  Transformation t;
  for (std::uint32_t x = 0; x < m; ++x) t.image.push_back(x);
  return t;
}

Transformation then(const Transformation& first, const Transformation& second) {
  if (first.domain_size() != second.domain_size()) {
    throw InputError("transformations on different domains");
  }
  Transformation t;
  for (std::uint32_t x : first.image) t.image.push_back(second(x));
  return t;
}

std::vector<Transformation> transformation_closure(const std::vector<Transformation>& generators,
                                                   bool with_identity) {
  if (generators.empty()) throw InputError("transformation closure needs a generator");
  const std::size_t m = generators.front().domain_size();
  for (const auto& g : generators) {
    if (g.domain_size() != m) throw InputError("transformations on different domains");
    for (std::uint32_t x : g.image) {
      if (x >= m) throw InputError("transformation image out of range");
    }
  }
  std::vector<Transformation> closure;
  std::set<Transformation> seen;
  std::deque<std::size_t> queue;
  auto add = [&](const Transformation& t) {
    if (seen.insert(t).second) {
      closure.push_back(t);
      queue.push_back(closure.size() - 1);
    }
  };
  if (with_identity) add(Transformation::identity(m));
  for (const auto& g : generators) add(g);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& g : generators) add(then(closure[i], g));
  }
  return closure;
}

MealyAutomaton finite_semigroup_automaton(const FiniteSemigroup& s, Element z) {
  if (z >= s.size()) throw InputError("right zero out of range");
  for (Element x = 0; x < s.size(); ++x) {
    if (s.multiply(x, z) != z) {
      throw InputError("'" + s.name(z) + "' is not a right zero");
    }
  }
  std::set<std::string> names;
  for (const auto& n : s.names()) names.insert(n + "\u0304");
  std::vector<std::string> symbols{detail::fresh_name(kAdjoinedOne, names)};
  for (const auto& n : s.names()) symbols.push_back(n + "\u0304");

  MealyAutomaton a(s.names(), std::move(symbols));
  for (Element t = 0; t < s.size(); ++t) {
    a.set_transition(t, 0, z, t + 1);
    for (Element b = 0; b < s.size(); ++b) a.set_transition(t, b + 1, z, s.multiply(b, t) + 1);
  }
  return a;
}

HomVerdict check_generator_hom(const GeneratorHom& hom, const MealyAutomaton& source,
                               std::size_t bound) {
  if (hom.image.size() != source.num_states()) {
    throw InputError("homomorphism is not total on the source states");
  }
  for (Element x : hom.image) {
    if (x >= hom.target.size()) throw InputError("homomorphism image out of range");
  }
  HomVerdict verdict;
  verdict.bound = bound;
  auto image_of = [&](const Word& w) {
    std::vector<Element> xs;
    for (StateId q : w) xs.push_back(hom.image[q]);
    return hom.target.product(xs);
  };

  WordClassifier classifier(source);
  std::vector<Element> class_image;
  for (const Word& w : all_words(source.num_states(), bound)) {
    const auto [cls, fresh] = classifier.classify(w);
    const Element img = image_of(w);
    if (fresh) {
      class_image.push_back(img);
    } else if (class_image[cls] != img) {
      verdict.pass = false;
      verdict.counterexample.emplace(w, classifier.representative(cls));
      return verdict;
    }
  }
  return verdict;
}

}  // namespace autsg
