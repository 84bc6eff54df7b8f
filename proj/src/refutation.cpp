#include <algorithm>

#include "autsg/word_problem.hpp"

namespace autsg {

namespace {

RefutationWitness not_hom(const Valuation& nu, Word u, Word v, bool words_equal,
                          std::string diagnostic) {
  RefutationWitness w;
  w.kind = RefutationKind::NotHom;
  w.sum_u = valuation_sum(nu, u);
  w.sum_v = valuation_sum(nu, v);
  w.words = {std::move(u), std::move(v)};
  w.words_equal = words_equal;
  w.diagnostic = std::move(diagnostic);
  return w;
}

RefutationWitness periodic(Word w, std::pair<std::size_t, std::size_t> mn,
                           std::string diagnostic) {
  RefutationWitness r;
  r.kind = RefutationKind::Periodic;
  r.words = {std::move(w)};
  r.m = mn.first;
  r.n = mn.second;
  r.diagnostic = std::move(diagnostic);
  return r;
}

std::string show(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string("z!");
}

}  // namespace

std::optional<std::uint64_t> valuation_sum(const Valuation& nu, const Word& w) {
  std::uint64_t sum = 0;
  for (StateId q : w) {
    if (q >= nu.size()) throw InputError("valuation does not cover state " + std::to_string(q));
    if (!nu[q]) return std::nullopt;
    sum += *nu[q];
  }
  return sum;
}

std::string to_string(RefutationKind kind) {
  switch (kind) {
    case RefutationKind::NotHom: return "NotHom";
    case RefutationKind::Periodic: return "Periodic";
    case RefutationKind::NoFiniteValues: return "NoFiniteValues";
    case RefutationKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::optional<RefutationWitness> find_valuation_violation(const MealyAutomaton& a,
                                                          const Valuation& nu,
                                                          std::size_t bound) {
  WordClassifier classifier(a);
  std::vector<std::optional<std::uint64_t>> class_sum;
  for (const Word& w : all_words(a.num_states(), bound)) {
    const auto [cls, fresh] = classifier.classify(w);
    const auto sum = valuation_sum(nu, w);
    if (fresh) {
      class_sum.push_back(sum);
    } else if (class_sum[cls] != sum) {
      return not_hom(nu, w, classifier.representative(cls), true,
                     "equal words with different values (bounded search)");
    }
  }
  for (std::size_t i = 0; i < class_sum.size(); ++i) {
    for (std::size_t j = i + 1; j < class_sum.size(); ++j) {
      if (class_sum[i] == class_sum[j]) {
        return not_hom(nu, classifier.representative(i), classifier.representative(j), false,
                       "distinct elements with the same value " + show(class_sum[i]) +
                           " (bounded search)");
      }
    }
  }
  return std::nullopt;
}

RefutationWitness refute_n0_valuation(const MealyAutomaton& a, const Valuation& nu) {
  require_valid(a);
  if (nu.size() != a.num_states()) throw InputError("valuation must assign every state");
  for (const auto& v : nu) {
    if (v && *v == 0) throw InputError("valuation values must be positive or z!");
  }

  auto fallback = [&](const std::string& step) {
    if (auto v = find_valuation_violation(a, nu)) {
      v->diagnostic = step + "; " + v->diagnostic;
      return *v;
    }
    RefutationWitness r;
    r.diagnostic = step;
    return r;
  };
  // Only pairs on which equality and the valuation disagree are witnesses.
  auto claim = [&](Word u, Word v, bool words_equal, const std::string& diagnostic) {
    if (words_equal == (valuation_sum(nu, u) == valuation_sum(nu, v))) return fallback(diagnostic);
    return not_hom(nu, std::move(u), std::move(v), words_equal, diagnostic);
  };

  std::optional<StateId> qk, ql;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!nu[q]) continue;
    if (!qk || *nu[q] > *nu[*qk]) qk = q;
    if (!ql || *nu[q] < *nu[*ql]) ql = q;
  }
  if (!qk) {
    RefutationWitness r;
    r.kind = RefutationKind::NoFiniteValues;
    r.diagnostic = "no state has a finite value";
    return r;
  }

  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!nu[q] && !is_zero_element(a, Word{q})) {
      return fallback("state '" + a.state_name(q) + "' is valued z! but is not a zero element");
    }
  }
  auto nu_zero = [&](const Word& w) {
    return std::all_of(w.begin(), w.end(), [&](StateId q) { return !nu[q]; }) ||
           is_zero_element(a, w);
  };

  const std::uint64_t k = *nu[*qk];
  const std::uint64_t l = *nu[*ql];

  if (k == l) {
    const Word q{*qk};
    const WreathRecursion rec = wreath_recursion(a, q);
    std::vector<bool> self(a.num_symbols());
    for (SymbolId b = 0; b < a.num_symbols(); ++b) {
      const Word& s = rec.sections[b];
      if (nu_zero(s)) continue;
      if (s != q && !equal(a, s, q).equal) {
        return claim(s, q, false,
                       "section at '" + a.symbol_name(b) + "' has the value " + std::to_string(k) +
                           " but differs from '" + a.state_name(*qk) + "'");
      }
      self[b] = true;
    }
    if (auto mn = periodic_from_pattern(a, q, self, rec.root_map)) {
      return periodic(q, *mn, "single finite value; the state is periodic");
    }
    return fallback("power pattern of '" + a.state_name(*qk) + "' did not verify");
  }

  const Word u = power(Word{*qk}, l);
  const Word v = power(Word{*ql}, k);
  if (!equal(a, u, v).equal) {
    return claim(u, v, false, "q_k^l and q_l^k share the value kl but are not equal");
  }
  const WreathRecursion ru = wreath_recursion(a, u);
  const WreathRecursion rv = wreath_recursion(a, v);
  std::vector<bool> self(a.num_symbols());
  for (SymbolId b = 0; b < a.num_symbols(); ++b) {
    const Word& w = ru.sections[b];
    const Word& x = rv.sections[b];
    if (nu_zero(w)) continue;
    const auto sw = valuation_sum(nu, w);
    const auto sx = valuation_sum(nu, x);
    const bool wx_equal = equal(a, w, x).equal;
    if (sw != sx) {
      if (wx_equal) {
        return claim(w, x, true,
                       "sections at '" + a.symbol_name(b) + "' are equal with values " + show(sw) +
                           " and " + show(sx));
      }
      return fallback("sections at '" + a.symbol_name(b) + "' of equal words are unequal");
    }
    const bool all_k = std::all_of(w.begin(), w.end(), [&](StateId q) { return nu[q] == k; });
    const bool all_l = std::all_of(x.begin(), x.end(), [&](StateId q) { return nu[q] == l; });
    if (!all_k || !all_l) {
      return fallback("sections at '" + a.symbol_name(b) + "' escape the forced shape");
    }
    if (!equal(a, w, u).equal) {
      return claim(w, u, false,
                     "section at '" + a.symbol_name(b) + "' has the value kl but differs from q_k^l");
    }
    self[b] = true;
  }
  if (auto mn = periodic_from_pattern(a, u, self, ru.root_map)) {
    return periodic(u, *mn, "q_k^l recurses only to itself and zeros");
  }
  return fallback("power pattern of q_k^l did not verify");
}

}  // namespace autsg
