#ifndef UGB_BINOMIAL_HPP
#define UGB_BINOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ugb/graph.hpp"

namespace ugb {

// Irreducible binomial x^plus - x^minus over the edge variables.
// Exponent vectors have length edge_count and disjoint supports;
// walk-derived entries never exceed 2.
struct Binomial {
    std::vector<int> plus;
    std::vector<int> minus;
    int degree = 0;  // sum of plus (= sum of minus)

    bool operator==(const Binomial& other) const {
        return plus == other.plus && minus == other.minus;
    }
    // Basis order: ascending (degree, lex plus, lex minus).
    bool operator<(const Binomial& other) const {
        if (degree != other.degree) return degree < other.degree;
        if (plus != other.plus) return plus < other.plus;
        return minus < other.minus;
    }
};

// A-degree of an exponent vector: sum of expo[e] * a_e in Z^n.
std::vector<int> a_degree(const Graph& g, const std::vector<int>& expo);

// Throws InvalidBinomialError (row attribution for file import) on any
// violated invariant: shape, entry range, disjoint supports, equal degrees,
// A-degree balance.
void validate_binomial(const Binomial& b, const Graph& g, int row = -1);

// Subgraph of a walk: edge support with per-edge multiplicity and parity.
struct WalkGraph {
    EdgeSubset support;
    std::vector<int> multiplicity;     // size edge_count, values 0..2
    std::vector<std::int8_t> parity;   // +1 plus side, -1 minus side, 0 off-support
};

// Closed even walk (edge-index sequence) to its binomial: odd positions
// multiply into plus, even positions into minus (1-based positions).
// Throws WalkError on invalid or reducible walks.
Binomial walk_to_binomial(const Graph& g, const std::vector<int>& walk);

WalkGraph support_walkgraph(const Binomial& b, const Graph& g);

struct PrimitivityResult {
    bool primitive = false;
    std::string reason;           // violated clause when not primitive
    EdgeSubset offending_block;   // when a block clause fails
    int offending_vertex = -1;    // when a cut-vertex clause fails

    explicit operator bool() const { return primitive; }
};

// Structural primitivity: the support is a single even cycle, or a block tree
// of cycles and doubled cut edges where every cut vertex lies in exactly two
// blocks and splits the cyclic edges into two odd halves.
PrimitivityResult is_primitive_structural(const WalkGraph& wg, const Graph& g);

// Definition-based oracle: search for a dominated balanced sub-pair
// (u', v') <= (plus, minus) other than the trivial ones.
// Throws SupportTooLargeError above the cap.
bool is_primitive_bruteforce(const Binomial& b, const Graph& g, int max_support = 24);

// Sign normalization: the unique representative of {B, -B} keeps the
// lexicographically larger side as plus. Idempotent.
Binomial canonicalize(Binomial b);

}  // namespace ugb

#endif
