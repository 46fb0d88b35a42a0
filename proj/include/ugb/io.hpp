#ifndef UGB_IO_HPP
#define UGB_IO_HPP

#include <string>

#include "ugb/binomial.hpp"
#include "ugb/graph.hpp"
#include "ugb/graver.hpp"

namespace ugb {

// Graph file: header "n m", then m lines "u v" with 1-based vertices.
// '#' starts a comment line; blank lines are ignored.
Graph parse_graph(const std::string& text);

enum class FormatStyle { vector_row, monomial };

// vector_row: m signed integers, plus minus minus, e.g. "1 -1 1 -1".
// monomial:   "e1*e3 - e2*e4", squared factors as "e5^2", ascending indices.
std::string format_binomial(const Binomial& b, FormatStyle style);

// Inverse of format_binomial; the style is detected from the text.
Binomial parse_binomial(const std::string& text, const Graph& g);

// Basis file: header "k m", then k signed rows. Rows are validated against
// the graph, canonicalized, sorted and deduplicated.
BasisSet parse_basis(const std::string& text, const Graph& g);
std::string format_basis(const BasisSet& basis, const Graph& g);

}  // namespace ugb

#endif
