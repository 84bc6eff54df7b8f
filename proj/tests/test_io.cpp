#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "support.hpp"

using namespace autsg;

namespace {

std::vector<std::string> fixtures_with(const std::string& ext) {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(AUTSG_FIXTURES)) {
    if (e.path().extension() == ext) out.push_back(e.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t error_line(const std::string& text) {
  try {
    parse_automaton(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("every automaton fixture round trips") {
  const auto names = fixtures_with(".mealy");
  REQUIRE(names.size() >= 10);
  for (const auto& n : names) {
    INFO(n);
    const auto a = testing::load_automaton(n);
    CHECK(validate(a).empty());
    const std::string text = serialize_automaton(a, {"round trip"});
    const auto b = parse_automaton(text);
    CHECK(b == a);
    CHECK(serialize_automaton(b, {"round trip"}) == text);
  }
}

TEST_CASE("semigroup and map fixtures round trip") {
  for (const auto& n : fixtures_with(".sg")) {
    INFO(n);
    const auto s = testing::load_semigroup(n);
    CHECK(parse_semigroup(serialize_semigroup(s)) == s);
  }
  for (const auto& ext : {".map", ".val"}) {
    for (const auto& n : fixtures_with(ext)) {
      INFO(n);
      const auto m = parse_map(read_file(testing::fixture(n)));
      CHECK(!m.empty());
      CHECK(parse_map(serialize_map(m)) == m);
    }
  }
}

TEST_CASE("quoted tokens") {
  const std::string text =
      "mealy v1\n"
      "states: \"D[a|b]^S\" \"two words\"\n"
      "alphabet: \"#\" x\n"
      "\"D[a|b]^S\" \"#\" -> \"two words\" x\n"
      "\"D[a|b]^S\" x -> \"D[a|b]^S\" \"#\"\n"
      "\"two words\" \"#\" -> \"two words\" \"#\"\n"
      "\"two words\" x -> \"two words\" x\n";
  const auto a = parse_automaton(text);
  CHECK(a.state_name(1) == "two words");
  CHECK(a.symbol_name(0) == "#");
  CHECK(parse_automaton(serialize_automaton(a)) == a);
}

TEST_CASE("parse errors carry line numbers") {
  const std::string head = "mealy v1\nstates: a\nalphabet: 0 1\n";
  CHECK(error_line("mealy v2\n") == 1);
  CHECK(error_line(head + "a 0 -> a 0\na 0 -> a 1\na 1 -> a 1\n") == 5);
  CHECK(error_line(head + "a 0 -> b 0\n") == 4);
  CHECK(error_line(head + "a 0 a 0\n") == 4);
  // A missing cell has no line of its own.
  CHECK_THROWS_AS(parse_automaton(head + "\n# only one\na 0 -> a 0\n"), ParseError);
  CHECK(error_line(head + "\n# only one\na 0 -> a 0\n") == 0);
  CHECK(error_line("mealy v1\nalphabet: 0\nstates: a\n") > 0);
  CHECK(error_line(head + "a 0 -> a \"unterminated\n") == 4);

  try {
    parse_semigroup("semigroup v1\nelements: x y\nrow x: y x\nrow y: y y\n");
    FAIL("non-associative table accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("associ") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_semigroup("semigroup v1\nelements: x\nrow x: q\n"), ParseError);
  CHECK_THROWS_AS(parse_map("map v1\na -> b\na -> c\n"), ParseError);
  CHECK_THROWS_AS(parse_map("map v1\na b\n"), ParseError);
  CHECK_THROWS_AS(read_file("/nonexistent/file"), InputError);
}
