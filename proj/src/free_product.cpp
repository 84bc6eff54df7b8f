#include <set>

#include "autsg/constructions.hpp"
#include "autsg/word_problem.hpp"
#include "text.hpp"

namespace autsg {

namespace {

using Kind = FreeProductSymbol::Kind;

std::vector<std::string> union_names(const std::vector<std::string>& first,
                                     const std::vector<std::string>& second) {
  std::vector<std::string> names = first;
  std::set<std::string> taken(first.begin(), first.end());
  for (const auto& n : second) {
    names.push_back(detail::fresh_name(n, taken));
    taken.insert(names.back());
  }
  return names;
}

void require_idempotent(const FiniteSemigroup& s, Element e, const char* which) {
  if (e >= s.size()) throw InputError(std::string(which) + " is out of range");
  if (s.multiply(e, e) != e) {
    throw InputError(std::string(which) + " '" + s.name(e) + "' is not idempotent");
  }
}

}  // namespace

std::vector<FreeProductSymbol> free_product_finite_symbols(const FreeProductFiniteSpec& spec) {
  const auto ns = static_cast<Element>(spec.s.size());
  const auto nt = static_cast<Element>(spec.t.size());
  std::vector<FreeProductSymbol> xs;
  xs.push_back({Kind::Domino, std::nullopt, std::nullopt, false});
  for (Element a = 0; a < ns; ++a) xs.push_back({Kind::Domino, a, std::nullopt, false});
  for (bool circled : {false, true}) {
    for (Element a = 0; a < ns; ++a) {
      for (Element b = 0; b < nt; ++b) xs.push_back({Kind::Domino, a, b, circled});
    }
  }
  xs.push_back({Kind::Tablet, std::nullopt, std::nullopt, false});
  for (Element b = 0; b < nt; ++b) xs.push_back({Kind::Tablet, std::nullopt, b, false});
  for (bool circled : {false, true}) {
    for (Element b = 0; b < nt; ++b) {
      for (Element a = 0; a < ns; ++a) xs.push_back({Kind::Tablet, a, b, circled});
    }
  }
  return xs;
}

std::string free_product_symbol_name(const FreeProductFiniteSpec& spec,
                                     const FreeProductSymbol& x) {
  auto s_part = [&] { return x.s ? spec.s.name(*x.s) : std::string("-"); };
  auto t_part = [&] { return x.t ? spec.t.name(*x.t) : std::string("-"); };
  std::string name = x.kind == Kind::Domino ? "D[" + s_part() + "|" + t_part() + "]"
                                            : "T[" + t_part() + "|" + s_part() + "]";
  if (x.circled) name += "o";
  return name;
}

MealyAutomaton free_product_finite(const FreeProductFiniteSpec& spec) {
  require_idempotent(spec.s, spec.e, "e");
  require_idempotent(spec.t, spec.f, "f");
  const auto symbols = free_product_finite_symbols(spec);
  std::vector<std::string> symbol_names;
  std::map<std::string, SymbolId> index;
  for (const auto& x : symbols) {
    symbol_names.push_back(free_product_symbol_name(spec, x));
    index.emplace(symbol_names.back(), static_cast<SymbolId>(symbol_names.size() - 1));
  }
  auto id = [&](Kind kind, std::optional<Element> s, std::optional<Element> t, bool circled) {
    return index.at(free_product_symbol_name(spec, {kind, s, t, circled}));
  };

  const auto ns = static_cast<StateId>(spec.s.size());
  MealyAutomaton a(union_names(spec.s.names(), spec.t.names()), symbol_names);
  const StateId e = spec.e;
  const StateId f = ns + spec.f;
  for (SymbolId c = 0; c < symbols.size(); ++c) {
    const FreeProductSymbol& x = symbols[c];
    for (StateId q = 0; q < a.num_states(); ++q) {
      const bool in_s = q < ns;
      const Element el = in_s ? q : q - ns;
      if (x.circled) {
        a.set_transition(q, c, q, c);
      } else if (x.kind == Kind::Domino) {
        if (!x.s) {
          a.set_transition(q, c, f, in_s ? id(Kind::Domino, el, std::nullopt, false) : c);
        } else if (!x.t) {
          a.set_transition(q, c, f,
                           in_s ? id(Kind::Domino, spec.s.multiply(*x.s, el), std::nullopt, false)
                                : id(Kind::Domino, x.s, el, false));
        } else if (in_s) {
          a.set_transition(q, c, q, id(Kind::Domino, x.s, x.t, true));
        } else {
          a.set_transition(q, c, f, id(Kind::Domino, x.s, spec.t.multiply(*x.t, el), false));
        }
      } else {
        if (!x.t) {
          a.set_transition(q, c, e, in_s ? c : id(Kind::Tablet, std::nullopt, el, false));
        } else if (!x.s) {
          a.set_transition(q, c, e,
                           in_s ? id(Kind::Tablet, el, x.t, false)
                                : id(Kind::Tablet, std::nullopt, spec.t.multiply(*x.t, el), false));
        } else if (in_s) {
          a.set_transition(q, c, e, id(Kind::Tablet, spec.s.multiply(*x.s, el), x.t, false));
        } else {
          a.set_transition(q, c, q, id(Kind::Tablet, x.s, x.t, true));
        }
      }
    }
  }
  return a;
}

BuiltAutomaton free_product_general(const FreeProductGeneralSpec& spec) {
  const MealyAutomaton& a1 = spec.a1;
  const MealyAutomaton& a2 = spec.a2;
  require_valid(a1);
  require_valid(a2);
  if (spec.e >= a1.num_states() || spec.f >= a2.num_states()) {
    throw InputError("distinguished state out of range");
  }
  BuiltAutomaton built{MealyAutomaton({}, {}), true, {}};
  if (spec.mode == HypothesisMode::IdempotentVerified) {
    if (!equal(a1, Word{spec.e, spec.e}, Word{spec.e}).equal) {
      throw InputError("'" + a1.state_name(spec.e) + "' is not idempotent");
    }
    if (!equal(a2, Word{spec.f, spec.f}, Word{spec.f}).equal) {
      throw InputError("'" + a2.state_name(spec.f) + "' is not idempotent");
    }
  } else {
    built.verified = false;
    built.notes.push_back("UNVERIFIED: hypothesis on e and f asserted, not checked");
  }

  const std::size_t na = a1.num_symbols();
  const std::size_t nb = a2.num_symbols();
  // Symbol layout: 4 domino blocks, 4 tablet blocks, then 8 gates.
  enum Mark { Plain = 0, MarkS = 1, MarkT = 2, Circled = 3 };
  const char* suffix[] = {"", "^S", "^T", "o"};
  std::vector<std::string> names;
  for (int m = 0; m < 4; ++m) {
    for (SymbolId a = 0; a < na; ++a) {
      for (SymbolId b = 0; b < nb; ++b) {
        names.push_back("D[" + a1.symbol_name(a) + "|" + a2.symbol_name(b) + "]" + suffix[m]);
      }
    }
  }
  for (int m = 0; m < 4; ++m) {
    for (SymbolId b = 0; b < nb; ++b) {
      for (SymbolId a = 0; a < na; ++a) {
        names.push_back("T[" + a2.symbol_name(b) + "|" + a1.symbol_name(a) + "]" + suffix[m]);
      }
    }
  }
  const SymbolId gates = static_cast<SymbolId>(names.size());
  for (const char* g : {"$", "$^", "$-", "$o", "#", "#^", "#-", "#o"}) names.push_back(g);
  auto domino = [&](int m, SymbolId a, SymbolId b) {
    return static_cast<SymbolId>((m * na + a) * nb + b);
  };
  auto tablet = [&](int m, SymbolId b, SymbolId a) {
    return static_cast<SymbolId>(4 * na * nb + (m * nb + b) * na + a);
  };
  enum Gate { Open = 0, Half = 1, Closed = 2, GateCircled = 3 };
  auto dollar = [&](int g) { return static_cast<SymbolId>(gates + g); };
  auto hash = [&](int g) { return static_cast<SymbolId>(gates + 4 + g); };

  MealyAutomaton a(union_names(a1.state_names(), a2.state_names()), names);
  const auto n1 = static_cast<StateId>(a1.num_states());
  const StateId e = spec.e;
  const StateId f = n1 + spec.f;
  for (StateId q = 0; q < a.num_states(); ++q) {
    const bool in_s = q < n1;
    const StateId local = in_s ? q : q - n1;
    for (int m = 0; m < 4; ++m) {
      for (SymbolId x = 0; x < na; ++x) {
        for (SymbolId y = 0; y < nb; ++y) {
          const SymbolId dc = domino(m, x, y);
          const SymbolId tc = tablet(m, y, x);
          if (m == Circled) {
            a.set_transition(q, dc, q, dc);
            a.set_transition(q, tc, q, tc);
          } else if (in_s) {
            const StateId s0 = a1.next(local, x);
            const SymbolId x0 = a1.out(local, x);
            if (m == Plain || m == MarkS) a.set_transition(q, dc, s0, domino(MarkS, x0, y));
            else a.set_transition(q, dc, q, domino(Circled, x, y));
            if (m == Plain) a.set_transition(q, tc, q, tc);
            else a.set_transition(q, tc, s0, tablet(MarkS, y, x0));
          } else {
            const StateId t0 = n1 + a2.next(local, y);
            const SymbolId y0 = a2.out(local, y);
            if (m == Plain) a.set_transition(q, dc, q, dc);
            else a.set_transition(q, dc, t0, domino(MarkT, x, y0));
            if (m == Plain || m == MarkT) a.set_transition(q, tc, t0, tablet(MarkT, y0, x));
            else a.set_transition(q, tc, q, tablet(Circled, y, x));
          }
        }
      }
    }
    // $-gates, and their duals the #-gates.
    if (in_s) {
      a.set_transition(q, dollar(Closed), f, dollar(Half));
      a.set_transition(q, dollar(Half), f, dollar(Half));
      a.set_transition(q, dollar(Open), q, dollar(GateCircled));
      a.set_transition(q, hash(Closed), e, hash(Closed));
      a.set_transition(q, hash(Half), e, hash(Open));
      a.set_transition(q, hash(Open), e, hash(Open));
    } else {
      a.set_transition(q, dollar(Closed), f, dollar(Closed));
      a.set_transition(q, dollar(Half), f, dollar(Open));
      a.set_transition(q, dollar(Open), f, dollar(Open));
      a.set_transition(q, hash(Closed), e, hash(Half));
      a.set_transition(q, hash(Half), e, hash(Half));
      a.set_transition(q, hash(Open), q, hash(GateCircled));
    }
    a.set_transition(q, dollar(GateCircled), q, dollar(GateCircled));
    a.set_transition(q, hash(GateCircled), q, hash(GateCircled));
  }
  built.automaton = std::move(a);
  return built;
}

}  // namespace autsg
