#ifndef ANOSOV_GRAPH6_HPP
#define ANOSOV_GRAPH6_HPP

#include <string>

#include "anosov/graph.hpp"

namespace anosov {

// graph6 text codec, interoperable with the usual graph tool ecosystem.
// Encoding: N(n) then the upper triangle read column by column ((0,1),
// (0,2), (1,2), (0,3), ...), six bits per printable byte, offset 63.
std::string to_graph6(const SimpleGraph& g);

// Parser. Accepts an optional ">>graph6<<" header and a trailing newline;
// anything else malformed raises input_error naming the byte offset.
SimpleGraph from_graph6(const std::string& text);

} // namespace anosov

#endif
