#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace autsg::detail {

/// Whitespace-separated tokens; a token may be double-quoted, with backslash
/// escaping a quote or backslash inside the quotes. Throws InputError on an
/// unterminated quote.
std::vector<std::string> tokenize(std::string_view text);

/// Quotes a token when it would not survive tokenize() unchanged.
std::string quote_if_needed(std::string_view token);

/// Returns base, or base followed by primes until it is not in `taken`.
template <typename Set>
std::string fresh_name(std::string base, const Set& taken) {
  while (taken.count(base) != 0) base += '\'';
  return base;
}

}  // namespace autsg::detail
