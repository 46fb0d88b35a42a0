#ifndef UGB_FILTER_HPP
#define UGB_FILTER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ugb/binomial.hpp"
#include "ugb/graph.hpp"
#include "ugb/graver.hpp"

namespace ugb {

// Record of one cycle-peeling run.
struct FilterTrace {
    std::vector<EdgeSubset> peeled_cycles;      // mixed cycles, in deletion order
    std::vector<EdgeSubset> deleted_cut_edges;  // dangling paths, in deletion order
    bool accepted = false;
    std::optional<EdgeSubset> rejecting_cycle;  // present iff rejected
    int rejecting_side = 0;                     // +1 / -1
    long step_count = 0;                        // elementary operations
};

// Cycle peeling on a working copy of the support: repeatedly trace from the
// smallest degree-2 vertex; a pure cycle rejects, a mixed cycle is deleted,
// dangling cut-edge paths are deleted; accept when no degree-2 vertex remains.
// The caller guarantees b is primitive; on other input the run is mechanical
// and carries no membership guarantee.
std::pair<bool, FilterTrace> filter_element(const Binomial& b, const Graph& g);

struct MixedResult {
    bool mixed = false;
    EdgeSubset pure_block;  // first pure cyclic block when not mixed
    int side = 0;           // parity of that block
};

// Oracle 1: every cyclic block of the support carries both parities.
MixedResult is_mixed_blocks(const Binomial& b, const Graph& g);

// Oracle 2: neither parity class contains a cycle (union-find acyclicity).
bool is_mixed_forest(const Binomial& b, const Graph& g);

struct UgbResult {
    BasisSet basis;                   // accepted elements, canonical order
    std::vector<FilterTrace> traces;  // one per input element, input order
};

// Filters a Graver basis down to the universal Groebner basis.
// With verify=true every element is additionally checked against both
// mixedness oracles; disagreement throws OracleMismatchError.
// workers > 1 splits the per-element map across threads; output is identical
// to the single-threaded run.
UgbResult universal_groebner_basis(const BasisSet& basis, const Graph& g,
                                   bool verify = false, int workers = 1);

}  // namespace ugb

#endif
