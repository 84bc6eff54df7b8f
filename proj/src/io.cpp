#include "autsg/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "text.hpp"

namespace autsg {

ParseError::ParseError(std::size_t line, const std::string& message)
    : InputError(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back({number, line.substr(first)});
  }
  return lines;
}

std::vector<std::string> tokens(const Line& line) {
  try {
    return detail::tokenize(line.text);
  } catch (const InputError& e) {
    throw ParseError(line.number, e.what());
  }
}

void expect_header(const std::vector<Line>& lines, const std::string& header) {
  if (lines.empty() || lines[0].text != header) {
    throw ParseError(lines.empty() ? 0 : lines[0].number, "expected header '" + header + "'");
  }
}

/// Tokens after a "label:" prefix. The label must be the first token.
std::vector<std::string> labelled(const std::vector<Line>& lines, std::size_t index,
                                  const std::string& label) {
  if (index >= lines.size()) throw ParseError(0, "missing '" + label + "' line");
  auto t = tokens(lines[index]);
  if (t.empty() || t[0] != label) throw ParseError(lines[index].number, "expected '" + label + "'");
  t.erase(t.begin());
  if (t.empty()) throw ParseError(lines[index].number, "'" + label + "' needs at least one name");
  std::set<std::string> seen;
  for (const auto& n : t) {
    if (!seen.insert(n).second) throw ParseError(lines[index].number, "duplicate name '" + n + "'");
  }
  return t;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += " " + detail::quote_if_needed(n);
  return out;
}

}  // namespace

MealyAutomaton parse_automaton(std::string_view text) {
  const auto lines = content_lines(text);
  expect_header(lines, "mealy v1");
  auto states = labelled(lines, 1, "states:");
  auto symbols = labelled(lines, 2, "alphabet:");
  MealyAutomaton a(states, symbols);
  std::vector<std::size_t> seen(a.num_states() * a.num_symbols(), 0);
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const auto t = tokens(lines[i]);
    const std::size_t n = lines[i].number;
    if (t.size() != 5 || t[2] != "->") throw ParseError(n, "expected 'q a -> r b'");
    auto state = [&](const std::string& name) {
      auto q = a.find_state(name);
      if (!q) throw ParseError(n, "unknown state '" + name + "'");
      return *q;
    };
    auto symbol = [&](const std::string& name) {
      auto b = a.find_symbol(name);
      if (!b) throw ParseError(n, "unknown symbol '" + name + "'");
      return *b;
    };
    const StateId q = state(t[0]);
    const SymbolId b = symbol(t[1]);
    std::size_t& prior = seen[q * a.num_symbols() + b];
    if (prior) {
      throw ParseError(n, "duplicate transition for (" + t[0] + ", " + t[1] + "), first on line " +
                              std::to_string(prior));
    }
    prior = n;
    a.set_transition(q, b, state(t[3]), symbol(t[4]));
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (SymbolId b = 0; b < a.num_symbols(); ++b) {
      if (!seen[q * a.num_symbols() + b]) {
        throw ParseError(0, "missing transition for (" + a.state_name(q) + ", " + a.symbol_name(b) + ")");
      }
    }
  }
  return a;
}

std::string serialize_automaton(const MealyAutomaton& a, const std::vector<std::string>& comments) {
  require_valid(a);
  std::ostringstream out;
  out << "mealy v1\n";
  for (const auto& c : comments) out << "# " << c << "\n";
  out << "states:" << join(a.state_names()) << "\n";
  out << "alphabet:" << join(a.symbol_names()) << "\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (SymbolId b = 0; b < a.num_symbols(); ++b) {
      out << detail::quote_if_needed(a.state_name(q)) << ' ' << detail::quote_if_needed(a.symbol_name(b))
          << " -> " << detail::quote_if_needed(a.state_name(a.next(q, b))) << ' '
          << detail::quote_if_needed(a.symbol_name(a.out(q, b))) << "\n";
    }
  }
  return out.str();
}

FiniteSemigroup parse_semigroup(std::string_view text) {
  const auto lines = content_lines(text);
  expect_header(lines, "semigroup v1");
  auto names = labelled(lines, 1, "elements:");
  std::map<std::string, Element> index;
  for (Element i = 0; i < names.size(); ++i) index[names[i]] = i;
  CayleyTable table(names.size());
  std::vector<bool> filled(names.size(), false);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto t = tokens(lines[i]);
    const std::size_t n = lines[i].number;
    if (t.size() < 2 || t[0] != "row" || t[1].empty() || t[1].back() != ':') {
      throw ParseError(n, "expected 'row <name>: <products>'");
    }
    const std::string name = t[1].substr(0, t[1].size() - 1);
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(n, "unknown element '" + name + "'");
    if (filled[it->second]) throw ParseError(n, "duplicate row for '" + name + "'");
    if (t.size() - 2 != names.size()) {
      throw ParseError(n, "row '" + name + "' needs " + std::to_string(names.size()) + " products");
    }
    for (std::size_t j = 2; j < t.size(); ++j) {
      auto p = index.find(t[j]);
      if (p == index.end()) throw ParseError(n, "unknown element '" + t[j] + "'");
      table[it->second].push_back(p->second);
    }
    filled[it->second] = true;
  }
  for (Element i = 0; i < names.size(); ++i) {
    if (!filled[i]) throw ParseError(0, "missing row for '" + names[i] + "'");
  }
  const auto defects = validate_semigroup(table);
  if (!defects.empty()) {
    const auto& [x, y, z] = defects.front();
    throw ParseError(0, "not associative: (" + names[x] + " " + names[y] + ") " + names[z] + " != " +
                            names[x] + " (" + names[y] + " " + names[z] + ")");
  }
  return FiniteSemigroup(std::move(names), std::move(table));
}

std::string serialize_semigroup(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << "semigroup v1\n";
  out << "elements:" << join(s.names()) << "\n";
  for (Element x = 0; x < s.size(); ++x) {
    out << "row " << detail::quote_if_needed(s.name(x) + ":");
    for (Element y = 0; y < s.size(); ++y) out << ' ' << detail::quote_if_needed(s.name(s.multiply(x, y)));
    out << "\n";
  }
  return out.str();
}

std::vector<MapEntry> parse_map(std::string_view text) {
  const auto lines = content_lines(text);
  expect_header(lines, "map v1");
  std::vector<MapEntry> entries;
  std::map<std::vector<std::string>, std::size_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = tokens(lines[i]);
    const std::size_t n = lines[i].number;
    std::size_t arrow = 0;
    std::size_t arrows = 0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t[j] == "->") {
        arrow = j;
        ++arrows;
      }
    }
    if (arrows != 1 || arrow == 0 || arrow + 1 == t.size()) throw ParseError(n, "expected 'key -> value'");
    MapEntry e{{t.begin(), t.begin() + static_cast<std::ptrdiff_t>(arrow)},
               {t.begin() + static_cast<std::ptrdiff_t>(arrow) + 1, t.end()},
               n};
    auto [it, fresh] = seen.emplace(e.key, n);
    if (!fresh) throw ParseError(n, "duplicate key, first on line " + std::to_string(it->second));
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string serialize_map(const std::vector<MapEntry>& entries) {
  std::string out = "map v1\n";
  for (const auto& e : entries) {
    std::string line;
    for (const auto& k : e.key) line += detail::quote_if_needed(k) + " ";
    line += "->";
    for (const auto& v : e.value) line += " " + detail::quote_if_needed(v);
    out += line + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace autsg
