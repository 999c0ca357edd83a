#pragma once

#include <string>
#include <string_view>

#include "prefixgroup/clopen.hpp"
#include "prefixgroup/prefix_map.hpp"

namespace prefixgroup {

// Literal grammars (whitespace allowed between tokens):
//   word    := 'e' | digit+
//   element := '{' word '->' word (',' word '->' word)* '}'
//   clopen  := '[' (word (',' word)*)? ']'
// All failures, including incomplete codes and letters outside the arity,
// are reported as ParseError carrying the offending position.

Word parse_word(std::string_view text, int arity);
PrefixMap parse_element(std::string_view text, int arity);
ClopenSet parse_clopen(std::string_view text, int arity);

inline std::string format(const PrefixMap &g) { return g.str(); }
inline std::string format(const ClopenSet &c) { return c.str(); }

}  // namespace prefixgroup
