#pragma once

// Text formats for automata, finite semigroups and key/value maps. Lines
// starting with '#' and blank lines are ignored; tokens are whitespace
// separated and double-quoted when they contain spaces.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "autsg/finite_algebra.hpp"
#include "autsg/mealy.hpp"

namespace autsg {

/// Input error carrying the 1-based line it was found on (0 if none).
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

MealyAutomaton parse_automaton(std::string_view text);
/// Transition lines in (state id, symbol id) order, after `comments` as '#' lines.
std::string serialize_automaton(const MealyAutomaton& a,
                                const std::vector<std::string>& comments = {});

FiniteSemigroup parse_semigroup(std::string_view text);
std::string serialize_semigroup(const FiniteSemigroup& s);

struct MapEntry {
  std::vector<std::string> key;
  std::vector<std::string> value;
  std::size_t line = 0;

  friend bool operator==(const MapEntry& x, const MapEntry& y) {
    return x.key == y.key && x.value == y.value;
  }
};

/// "key tokens -> value tokens" lines; duplicate keys are rejected.
std::vector<MapEntry> parse_map(std::string_view text);
std::string serialize_map(const std::vector<MapEntry>& entries);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace autsg
