#ifndef UGB_GRAPH_HPP
#define UGB_GRAPH_HPP

#include <utility>
#include <vector>

namespace ugb {

// Sorted list of edge indices into a parent Graph.
using EdgeSubset = std::vector<int>;

// Simple undirected graph with stable 0-based edge indices (1-based in I/O).
// Immutable after build_graph.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;                    // endpoints, u < v
    std::vector<std::vector<std::pair<int, int>>> adjacency;   // per vertex: (neighbor, edge)

    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Validates no self-loops, no parallel edges, vertices in range.
// Edge order is preserved from the input.
Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

// Column a_e of the configuration A_G: 1 at both endpoints, 0 elsewhere.
std::vector<int> incidence_vector(const Graph& g, int edge);

// Per-vertex degrees of the subgraph induced by `support`.
// The multiplicity overload counts each edge `multiplicity[e]` times
// (multiplicity is indexed by edge over the whole graph).
std::vector<int> degrees(const Graph& g, const EdgeSubset& support);
std::vector<int> degrees(const Graph& g, const EdgeSubset& support,
                         const std::vector<int>& multiplicity);

struct BlockDecomposition {
    std::vector<EdgeSubset> blocks;       // partition of the support edge set
    std::vector<int> cut_vertices;        // sorted
    std::vector<int> blocks_per_vertex;   // size vertex_count; 0 for untouched vertices
};

// Blocks (biconnected components) and cut vertices of the support subgraph.
// Disconnected supports are decomposed per component and the results unioned.
BlockDecomposition block_decomposition(const Graph& g, const EdgeSubset& support);

// Edge sets of the connected components of the support subgraph.
// Isolated vertices are ignored. Components are ordered by smallest vertex.
std::vector<EdgeSubset> connected_components(const Graph& g, const EdgeSubset& support);

}  // namespace ugb

#endif
