#include <catch2/catch_amalgamated.hpp>

#include "autsg/constructions.hpp"
#include "autsg/word_problem.hpp"
#include "support.hpp"

using namespace autsg;
using testing::load_automaton;

namespace {

Valuation load_valuation(const MealyAutomaton& a, const std::string& name) {
  Valuation nu(a.num_states());
  for (const auto& e : parse_map(read_file(testing::fixture(name)))) {
    const std::string& v = e.value.at(0);
    nu[a.state(e.key.at(0))] = v == "z!" ? std::nullopt : std::optional<std::uint64_t>(std::stoull(v));
  }
  return nu;
}

// A NotHom witness must exhibit a real disagreement between equal() and the sums.
void check_not_hom(const MealyAutomaton& a, const Valuation& nu, const RefutationWitness& w) {
  REQUIRE(w.kind == RefutationKind::NotHom);
  REQUIRE(w.words.size() == 2);
  const bool eq = equal(a, w.words[0], w.words[1]).equal;
  CHECK(eq == w.words_equal);
  CHECK(w.sum_u == valuation_sum(nu, w.words[0]));
  CHECK(w.sum_v == valuation_sum(nu, w.words[1]));
  CHECK(eq != (w.sum_u == w.sum_v));
}

}  // namespace

TEST_CASE("valuation sums") {
  const Valuation nu{std::uint64_t{2}, std::uint64_t{3}, std::nullopt};
  CHECK(valuation_sum(nu, Word{0, 1, 1}) == 8);
  CHECK(!valuation_sum(nu, Word{0, 2}));
}

TEST_CASE("periodic sink examples") {
  const auto a = load_automaton("sink3.mealy");
  const auto nu = load_valuation(a, "sink3.val");
  const auto w = refute_n0_valuation(a, nu);
  CHECK(w.kind == RefutationKind::Periodic);
  REQUIRE(w.words.size() == 1);
  CHECK(w.m < w.n);
  CHECK(w.n <= periodicity_bound(a.num_symbols()));
  CHECK(equal(a, power(w.words[0], w.m), power(w.words[0], w.n)).equal);

  const auto flat = load_automaton("sink_flat.mealy");
  const auto wf = refute_n0_valuation(flat, load_valuation(flat, "sink_flat.val"));
  CHECK(wf.kind == RefutationKind::Periodic);
  CHECK(equal(flat, power(wf.words.at(0), wf.m), power(wf.words.at(0), wf.n)).equal);
}

TEST_CASE("all states valued zero") {
  const auto a = load_automaton("sink3.mealy");
  CHECK(refute_n0_valuation(a, load_valuation(a, "sink3_none.val")).kind ==
        RefutationKind::NoFiniteValues);
}

TEST_CASE("the N0 automaton with several finite values") {
  const auto a = load_automaton("n0.mealy");
  const auto nu = load_valuation(a, "n0.val");
  check_not_hom(a, nu, refute_n0_valuation(a, nu));
}

TEST_CASE("adjoining a zero to the N0 automaton") {
  const auto a = adjoin_zero(load_automaton("n0.mealy"));
  CHECK(isomorphic(a, load_automaton("n0_zero.mealy")));
  const auto nu = load_valuation(a, "n0_zero.val");
  const auto w = refute_n0_valuation(a, nu);
  CHECK(w.kind != RefutationKind::Inconclusive);
  check_not_hom(a, nu, w);

  // The natural valuation a -> 1 is refuted as well.
  Valuation natural(a.num_states(), std::nullopt);
  natural[a.state("b")] = 1;
  natural[a.state("a")] = 1;
  const auto wn = refute_n0_valuation(a, natural);
  CHECK(wn.kind != RefutationKind::Inconclusive);
}

TEST_CASE("refutation input errors") {
  const auto a = load_automaton("n0.mealy");
  CHECK_THROWS_AS(refute_n0_valuation(a, Valuation{std::uint64_t{0}, std::uint64_t{1}}), InputError);
  CHECK_THROWS_AS(refute_n0_valuation(a, Valuation{std::uint64_t{1}}), InputError);
}

TEST_CASE("bounded violation search") {
  // The flat sink q -> 2: q^1 = q^3 but 2 != 6, so there is a violation.
  const auto flat = load_automaton("sink_flat.mealy");
  const auto nu = load_valuation(flat, "sink_flat.val");
  const auto v = find_valuation_violation(flat, nu, 3);
  REQUIRE(v);
  check_not_hom(flat, nu, *v);

  // One letter, length 1: nothing to compare.
  MealyAutomaton id({"i"}, {"0"});
  id.set_transition(0, 0, 0, 0);
  CHECK(!find_valuation_violation(id, Valuation{std::uint64_t{1}}, 1));
}

TEST_CASE("refutation kinds print") {
  CHECK(to_string(RefutationKind::NotHom) == "NotHom");
  CHECK(to_string(RefutationKind::Periodic) == "Periodic");
  CHECK(to_string(RefutationKind::NoFiniteValues) == "NoFiniteValues");
  CHECK(to_string(RefutationKind::Inconclusive) == "Inconclusive");
}
