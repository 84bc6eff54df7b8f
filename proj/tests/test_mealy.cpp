#include <catch2/catch_amalgamated.hpp>

#include "autsg/constructions.hpp"
#include "autsg/mealy.hpp"
#include "support.hpp"

using namespace autsg;
using testing::load_automaton;

namespace {

MealyAutomaton c2_free_product() {
  const auto c2 = testing::load_semigroup("c2.sg");
  return free_product_finite({c2, c2, c2.element("1"), c2.element("1")});
}

}  // namespace

TEST_CASE("validate accepts the N0 automaton") {
  const auto a = load_automaton("n0.mealy");
  CHECK(a.num_states() == 2);
  CHECK(a.num_symbols() == 2);
  CHECK(validate(a).empty());
}

TEST_CASE("validate names a missing cell") {
  MealyAutomaton a({"a", "b"}, {"0", "1"});
  a.set_transition(0, 0, 0, 0);
  a.set_transition(0, 1, 0, 1);
  a.set_transition(1, 0, 1, 0);
  const auto defects = validate(a);
  REQUIRE(defects.size() == 1);
  CHECK(defects[0].state == 1);
  CHECK(defects[0].symbol == 1);
  CHECK_THROWS_AS(require_valid(a), InputError);
}

TEST_CASE("validate reports an out-of-range target") {
  MealyAutomaton a({"a"}, {"0"});
  a.set_transition(0, 0, 5, 0);
  CHECK(validate(a).size() == 1);
}

TEST_CASE("act on finite strings") {
  const auto a = load_automaton("n0.mealy");
  const StateId b = a.state("b");
  CHECK(act(a, Word{b}, parse_string(a, "1 0")) == parse_string(a, "0 0"));
  const String s = parse_string(a, "1 1 0 1");
  CHECK(act(a, Word{a.state("a")}, s) == s);
  CHECK_THROWS_AS(parse_string(a, "2"), InputError);
}

TEST_CASE("act writes the first domino of a free product") {
  const auto a = c2_free_product();
  const Word w = parse_word(a, "g g'");
  CHECK(format_string(a, act(a, w, parse_string(a, "D[-|-] D[-|-]"))) == "D[g|g] D[-|-]");
}

TEST_CASE("restriction follows the edges") {
  const auto a = load_automaton("n0.mealy");
  const Word b{a.state("b")};
  CHECK(restriction(a, b, parse_string(a, "1")) == Word{a.state("a")});
  CHECK(restriction(a, b, parse_string(a, "0")) == b);
  CHECK(restriction(a, b, String{}) == b);
}

TEST_CASE("restriction law on random strings") {
  const auto a = load_automaton("semilattice_f2_n0.mealy");
  std::mt19937 rng(7);
  std::uniform_int_distribution<SymbolId> sym(0, static_cast<SymbolId>(a.num_symbols() - 1));
  for (int i = 0; i < 200; ++i) {
    const Word w = testing::random_word(rng, a.num_states(), 4);
    String prefix(i % 4), beta(1 + i % 3);
    for (auto& x : prefix) x = sym(rng);
    for (auto& x : beta) x = sym(rng);
    String joined = prefix;
    joined.insert(joined.end(), beta.begin(), beta.end());
    String expected = act(a, w, prefix);
    const String tail = act(a, restriction(a, w, prefix), beta);
    expected.insert(expected.end(), tail.begin(), tail.end());
    CHECK(act(a, w, joined) == expected);
  }
}

TEST_CASE("wreath recursion of the N0 generators") {
  const auto a = load_automaton("n0.mealy");
  const StateId qa = a.state("a"), qb = a.state("b");
  const auto rb = wreath_recursion(a, Word{qb});
  CHECK(rb.root_map == std::vector<SymbolId>{0, 0});
  CHECK(rb.sections == std::vector<Word>{Word{qb}, Word{qa}});
  CHECK(rb.length == 1);
  const auto ra = wreath_recursion(a, Word{qa});
  CHECK(ra.root_map == std::vector<SymbolId>{0, 1});
  CHECK(ra.sections == std::vector<Word>{Word{qa}, Word{qa}});
  const auto rbb = wreath_recursion(a, Word{qb, qb});
  CHECK(rbb.root_map == std::vector<SymbolId>{0, 0});
  CHECK(rbb.sections == std::vector<Word>{Word{qb, qb}, Word{qa, qb}});
  CHECK(compose_recursions(rb, rb) == rbb);
  const auto rab = compose_recursions(ra, rb);
  CHECK(rab.root_map == rb.root_map);
  CHECK(rab.sections == std::vector<Word>{Word{qa, qb}, Word{qa, qa}});
}

TEST_CASE("composition of recursions is associative and matches concatenation") {
  const auto a = c2_free_product();
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Word x = testing::random_word(rng, a.num_states(), 3);
    const Word y = testing::random_word(rng, a.num_states(), 3);
    const Word z = testing::random_word(rng, a.num_states(), 3);
    const auto rx = wreath_recursion(a, x), ry = wreath_recursion(a, y), rz = wreath_recursion(a, z);
    CHECK(compose_recursions(compose_recursions(rx, ry), rz) ==
          compose_recursions(rx, compose_recursions(ry, rz)));
    CHECK(compose_recursions(rx, ry) == wreath_recursion(a, x + y));
  }
  const auto r = wreath_recursion(a, Word{0});
  CHECK_THROWS_AS(compose_recursions(r, wreath_recursion(load_automaton("n0.mealy"), Word{0})),
                  InputError);
}

TEST_CASE("eventually periodic image of a reduced word") {
  const auto a = c2_free_product();
  const Word w = parse_word(a, "g g' 1 1'");
  const EventuallyPeriodicString blank{{}, parse_string(a, "D[-|-]")};
  const auto image = act_eventually_periodic(a, w, blank);
  CHECK(format_string(a, image.prefix) == "D[g|g]o D[1|1]");
  CHECK(format_string(a, image.period) == "D[-|-]");
  CHECK(act_eventually_periodic(a, Word{a.state("1")}, blank).period.size() == 1);
}

TEST_CASE("eventually periodic images agree with finite unrolling") {
  const auto a = load_automaton("n0_wreath_c2.mealy");
  std::mt19937 rng(5);
  std::uniform_int_distribution<SymbolId> sym(0, static_cast<SymbolId>(a.num_symbols() - 1));
  for (int i = 0; i < 100; ++i) {
    EventuallyPeriodicString s;
    s.prefix.resize(i % 3);
    s.period.resize(1 + i % 4);
    for (auto& x : s.prefix) x = sym(rng);
    for (auto& x : s.period) x = sym(rng);
    const Word w = testing::random_word(rng, a.num_states(), 3);
    const auto image = act_eventually_periodic(a, w, s);
    CHECK(image == image.canonical());
    CHECK(image.unroll(40) == act(a, w, s.unroll(40)));
  }
}

TEST_CASE("canonical form identifies equal infinite strings") {
  const EventuallyPeriodicString x{{1, 0, 1}, {0, 1}};
  const EventuallyPeriodicString y{{1}, {0, 1, 0, 1}};
  CHECK(x.canonical() == y.canonical());
  CHECK(x.canonical().prefix.empty());
  CHECK(x.canonical().period == String{1, 0});
  std::mt19937 rng(3);
  std::uniform_int_distribution<SymbolId> bit(0, 1);
  for (int i = 0; i < 300; ++i) {
    EventuallyPeriodicString p, q;
    p.prefix.resize(i % 4);
    q.prefix.resize((i / 4) % 4);
    p.period.resize(1 + i % 3);
    q.period.resize(1 + (i / 3) % 3);
    for (auto* s : {&p.prefix, &p.period, &q.prefix, &q.period}) {
      for (auto& c : *s) c = bit(rng);
    }
    CHECK((p.canonical() == q.canonical()) == (p.unroll(64) == q.unroll(64)));
  }
}

TEST_CASE("minimize merges behaviourally equal states") {
  const auto a = adjoin_identity(load_automaton("n0.mealy"));
  const auto m = minimize(a);
  CHECK(m.automaton.num_states() == 2);
  CHECK(m.class_of[a.state("a")] == m.class_of[a.num_states() - 1]);
  CHECK(minimize(load_automaton("n0_wreath_c2.mealy")).automaton.num_states() == 8);
}

TEST_CASE("isomorphic finds relabelings and rejects different tables") {
  const auto a = load_automaton("n0.mealy");
  MealyAutomaton b({"y", "x"}, {"one", "zero"});
  // x = a, y = b; symbol 1 -> one, 0 -> zero
  b.set_transition(1, 1, 1, 1);
  b.set_transition(1, 0, 1, 0);
  b.set_transition(0, 1, 0, 1);
  b.set_transition(0, 0, 1, 1);
  const auto iso = isomorphic(a, b);
  REQUIRE(iso);
  CHECK(iso->state_map[a.state("b")] == 0);
  CHECK(!isomorphic(a, load_automaton("f2.mealy")));
}

TEST_CASE("dot export lists every edge") {
  const auto a = load_automaton("n0.mealy");
  const std::string dot = export_dot(a);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("1|0") != std::string::npos);
}

TEST_CASE("empty words are rejected") {
  const auto a = load_automaton("n0.mealy");
  CHECK_THROWS_AS(parse_word(a, ""), InputError);
  CHECK_THROWS_AS(Word(std::vector<StateId>{}), InputError);
  CHECK_THROWS_AS(parse_word(a, "a c"), InputError);
}
