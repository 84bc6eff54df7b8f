#include "autsg/word_problem.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace autsg {

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<StateId>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (StateId x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 31);
}

void check_word(const MealyAutomaton& a, const Word& w) {
  for (StateId q : w) {
    if (q >= a.num_states()) throw InputError("unknown state id " + std::to_string(q));
  }
}

}  // namespace

Equality equal(const MealyAutomaton& a, const Word& u, const Word& v) {
  check_word(a, u);
  check_word(a, v);
  const std::size_t split = u.size();

  struct Node {
    std::size_t parent;
    SymbolId symbol;
  };
  std::vector<std::vector<StateId>> configs;
  std::vector<Node> nodes;
  std::unordered_map<std::vector<StateId>, std::size_t, TupleHash> index;

  std::vector<StateId> start(u.begin(), u.end());
  start.insert(start.end(), v.begin(), v.end());
  index.emplace(start, 0);
  configs.push_back(std::move(start));
  nodes.push_back({0, 0});

  auto path_to = [&](std::size_t node, SymbolId last) {
    String s{last};
    while (node != 0) {
      s.push_back(nodes[node].symbol);
      node = nodes[node].parent;
    }
    std::reverse(s.begin(), s.end());
    return s;
  };

  Equality result;
  for (std::size_t head = 0; head < configs.size(); ++head) {
    for (SymbolId b = 0; b < a.num_symbols(); ++b) {
      std::vector<StateId> next = configs[head];
      SymbolId left = b;
      for (std::size_t i = 0; i < split; ++i) {
        const SymbolId o = a.out(next[i], left);
        next[i] = a.next(next[i], left);
        left = o;
      }
      SymbolId right = b;
      for (std::size_t i = split; i < next.size(); ++i) {
        const SymbolId o = a.out(next[i], right);
        next[i] = a.next(next[i], right);
        right = o;
      }
      if (left != right) {
        result.equal = false;
        result.witness = path_to(head, b);
        result.explored = configs.size();
        return result;
      }
      if (index.find(next) == index.end()) {
        index.emplace(next, configs.size());
        configs.push_back(std::move(next));
        nodes.push_back({head, b});
      }
    }
  }
  result.equal = true;
  result.explored = configs.size();
  return result;
}

// ---------------------------------------------------------------------------
// WordClassifier

WordClassifier::WordClassifier(const MealyAutomaton& a, std::size_t initial_depth)
    : automaton_(a), depth_(effective_depth(std::max<std::size_t>(initial_depth, 1))) {}

std::size_t WordClassifier::effective_depth(std::size_t depth) const {
  // Keep the fingerprint level to at most 2^17 strings.
  const std::size_t nb = std::max<std::size_t>(automaton_.num_symbols(), 1);
  std::size_t d = 0;
  std::size_t leaves = 1;
  while (d < depth && leaves * nb <= (std::size_t{1} << 17)) {
    leaves *= nb;
    ++d;
  }
  return std::max<std::size_t>(d, 1);
}

std::uint64_t WordClassifier::fingerprint(const Word& w) const {
  // Depth-first over every string of length depth_, hashing each output symbol.
  const std::size_t nb = automaton_.num_symbols();
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  std::vector<std::vector<StateId>> stack_states{std::vector<StateId>(w.begin(), w.end())};
  std::vector<SymbolId> stack_symbol{0};
  while (!stack_states.empty()) {
    const std::size_t level = stack_states.size() - 1;
    SymbolId& b = stack_symbol.back();
    if (level == depth_ || b == nb) {
      stack_states.pop_back();
      stack_symbol.pop_back();
      if (!stack_symbol.empty()) ++stack_symbol.back();
      continue;
    }
    std::vector<StateId> next = stack_states.back();
    SymbolId s = b;
    for (auto& q : next) {
      const SymbolId o = automaton_.out(q, s);
      q = automaton_.next(q, s);
      s = o;
    }
    h = mix(h, s);
    stack_states.push_back(std::move(next));
    stack_symbol.push_back(0);
  }
  return h;
}

void WordClassifier::rebuild(std::size_t depth) {
  depth_ = depth;
  buckets_.clear();
  for (std::size_t i = 0; i < representatives_.size(); ++i) {
    buckets_[fingerprint(representatives_[i])].push_back(i);
  }
}

std::optional<std::size_t> WordClassifier::find(const Word& w) const {
  auto it = buckets_.find(fingerprint(w));
  if (it == buckets_.end()) return std::nullopt;
  for (std::size_t cls : it->second) {
    if (equal(automaton_, representatives_[cls], w).equal) return cls;
  }
  return std::nullopt;
}

std::pair<std::size_t, bool> WordClassifier::classify(const Word& w) {
  const std::uint64_t fp = fingerprint(w);
  auto& bucket = buckets_[fp];
  for (std::size_t cls : bucket) {
    if (equal(automaton_, representatives_[cls], w).equal) return {cls, false};
  }
  const std::size_t cls = representatives_.size();
  representatives_.push_back(w);
  bucket.push_back(cls);
  if (bucket.size() > 32) {
    const std::size_t deeper = effective_depth(depth_ * 2);
    if (deeper > depth_) rebuild(deeper);
  }
  return {cls, true};
}

std::vector<Word> all_words(std::size_t letters, std::size_t max_length) {
  std::vector<Word> words;
  if (letters == 0) return words;
  std::vector<std::vector<StateId>> level{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<StateId>> next;
    for (const auto& prefix : level) {
      for (StateId q = 0; q < letters; ++q) {
        auto w = prefix;
        w.push_back(q);
        words.emplace_back(w);
        next.push_back(std::move(w));
      }
    }
    level = std::move(next);
  }
  return words;
}

// ---------------------------------------------------------------------------

RestrictionCheck restrictions_respect_equality(const MealyAutomaton& a, const Word& u,
                                               const Word& v, std::size_t depth) {
  if (!equal(a, u, v).equal) {
    throw PreconditionError("restriction check needs equal words: " + format_word(a, u) +
                            " != " + format_word(a, v));
  }
  RestrictionCheck check;
  std::vector<String> level{String{}};
  for (std::size_t len = 0; len <= depth; ++len) {
    std::vector<String> next;
    for (const auto& alpha : level) {
      if (!equal(a, restriction(a, u, alpha), restriction(a, v, alpha)).equal) {
        check.pass = false;
        check.failing_prefix = alpha;
        return check;
      }
      if (len == depth) continue;
      for (SymbolId b = 0; b < a.num_symbols(); ++b) {
        auto longer = alpha;
        longer.push_back(b);
        next.push_back(std::move(longer));
      }
    }
    level = std::move(next);
  }
  return check;
}

Ball ball(const MealyAutomaton& a, std::size_t radius) {
  if (radius == 0) throw InputError("ball radius must be at least 1");
  require_valid(a);
  WordClassifier classifier(a);
  Ball result;
  // The shortlex-least word of an element of length k is a length-(k-1)
  // representative followed by one generator.
  std::vector<Word> frontier;
  for (StateId q = 0; q < a.num_states(); ++q) {
    Word w{q};
    if (classifier.classify(w).second) {
      result.representatives.push_back(w);
      frontier.push_back(w);
    }
  }
  result.growth.push_back(frontier.size());
  for (std::size_t len = 2; len <= radius; ++len) {
    std::vector<Word> next;
    for (const Word& prefix : frontier) {
      for (StateId q = 0; q < a.num_states(); ++q) {
        Word w = prefix + Word{q};
        if (classifier.classify(w).second) {
          result.representatives.push_back(w);
          next.push_back(std::move(w));
        }
      }
    }
    result.growth.push_back(next.size());
    frontier = std::move(next);
  }
  return result;
}

bool is_zero_element(const MealyAutomaton& a, const Word& w) {
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!equal(a, w + Word{q}, w).equal || !equal(a, Word{q} + w, w).equal) return false;
  }
  return true;
}

std::uint64_t periodicity_bound(std::size_t alphabet_size) {
  constexpr std::uint64_t kMax = UINT64_MAX;
  auto mul = [](std::uint64_t x, std::uint64_t y) {
    if (x != 0 && y > kMax / x) return kMax;
    return x * y;
  };
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < alphabet_size; ++i) bound = mul(bound, 2);
  for (std::size_t i = 0; i < alphabet_size; ++i) bound = mul(bound, alphabet_size);
  return bound == kMax ? kMax : bound + 1;
}

std::optional<std::pair<std::size_t, std::size_t>> periodic_from_pattern(
    const MealyAutomaton& a, const Word& w, const std::vector<bool>& self_sections,
    const std::vector<SymbolId>& root_map) {
  const std::size_t nb = root_map.size();
  if (self_sections.size() != nb) throw InputError("pattern flags do not match the alphabet");

  // The section of w^n at b is w^n when every factor along the orbit of b was
  // w itself, and a zero element otherwise.
  using Pattern = std::pair<std::vector<bool>, std::vector<SymbolId>>;
  std::map<Pattern, std::size_t> seen;
  Pattern current{self_sections, root_map};
  const std::uint64_t bound = periodicity_bound(nb);
  for (std::size_t n = 1; n <= bound; ++n) {
    auto [it, inserted] = seen.emplace(current, n);
    if (!inserted) {
      const std::size_t m = it->second;
      if (!equal(a, power(w, m), power(w, n)).equal) return std::nullopt;
      return std::make_pair(m, n);
    }
    Pattern next;
    for (SymbolId b = 0; b < nb; ++b) {
      const SymbolId image = current.second[b];
      next.first.push_back(current.first[b] && self_sections[image]);
      next.second.push_back(root_map[image]);
    }
    current = std::move(next);
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> periodic_by_recursion(const MealyAutomaton& a,
                                                                         StateId q, StateId z) {
  require_valid(a);
  if (q >= a.num_states() || z >= a.num_states()) throw InputError("state id out of range");
  if (!is_zero_element(a, Word{z})) {
    throw PreconditionError("state '" + a.state_name(z) + "' is not a zero element");
  }
  const WreathRecursion rec = wreath_recursion(a, Word{q});
  std::vector<bool> self(a.num_symbols());
  for (SymbolId b = 0; b < a.num_symbols(); ++b) {
    const Word& section = rec.sections[b];
    if (section == Word{q}) {
      self[b] = true;
    } else if (section != Word{z}) {
      throw PreconditionError("section of '" + a.state_name(q) + "' at symbol '" +
                              a.symbol_name(b) + "' is '" + format_word(a, section) +
                              "', not the state itself or the zero");
    }
  }
  return periodic_from_pattern(a, Word{q}, self, rec.root_map);
}

}  // namespace autsg
