#ifndef UGB_GRAVER_HPP
#define UGB_GRAVER_HPP

#include <map>
#include <vector>

#include "ugb/binomial.hpp"
#include "ugb/graph.hpp"

namespace ugb {

struct EnumerationLimits {
    int max_degree = 0;                  // 0: use default_max_degree(n)
    long max_walks = 50'000'000;         // explored walk-search states
    int max_edges_support = 24;          // brute-force oracle cap
};

// Degree bound for primitive binomials: n-2 for n >= 4, else 2.
int default_max_degree(int vertex_count);

// Canonical, deduplicated, (degree, lex)-ordered collection of binomials.
struct BasisSet {
    enum class Source { enumerated, imported };
    std::vector<Binomial> elements;
    Source source = Source::enumerated;

    int size() const { return static_cast<int>(elements.size()); }
};

// Every irreducible binomial of an even closed walk of length
// <= 2 * max_degree, once each in canonical form. Not primitivity-filtered.
// Throws LimitExceededError when the search exceeds max_walks states.
BasisSet enumerate_walk_binomials(const Graph& g, EnumerationLimits limits = {});

// The Graver basis: walk binomials passing the structural primitivity test.
// Supports within the oracle cap are cross-checked against the brute-force
// definition; disagreement throws OracleMismatchError.
BasisSet graver_basis(const Graph& g, EnumerationLimits limits = {});

std::map<int, int> degree_histogram(const BasisSet& basis);

}  // namespace ugb

#endif
