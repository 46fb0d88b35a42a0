#include "ugb/graph.hpp"

#include <algorithm>
#include <set>

#include "ugb/errors.hpp"

namespace ugb {

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
    Graph g;
    g.vertex_count = vertex_count;
    g.adjacency.resize(vertex_count);
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < static_cast<int>(edge_list.size()); ++e) {
        auto [u, v] = edge_list[e];
        if (u < 0 || u >= vertex_count) throw VertexOutOfRangeError(u);
        if (v < 0 || v >= vertex_count) throw VertexOutOfRangeError(v);
        if (u == v) throw SelfLoopError(e);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw DuplicateEdgeError(e);
        g.edges.emplace_back(key.first, key.second);
        g.adjacency[u].emplace_back(v, e);
        g.adjacency[v].emplace_back(u, e);
    }
    return g;
}

std::vector<int> incidence_vector(const Graph& g, int edge) {
    std::vector<int> a(g.vertex_count, 0);
    a[g.edges[edge].first] = 1;
    a[g.edges[edge].second] = 1;
    return a;
}

std::vector<int> degrees(const Graph& g, const EdgeSubset& support) {
    std::vector<int> deg(g.vertex_count, 0);
    for (int e : support) {
        deg[g.edges[e].first] += 1;
        deg[g.edges[e].second] += 1;
    }
    return deg;
}

std::vector<int> degrees(const Graph& g, const EdgeSubset& support,
                         const std::vector<int>& multiplicity) {
    std::vector<int> deg(g.vertex_count, 0);
    for (int e : support) {
        deg[g.edges[e].first] += multiplicity[e];
        deg[g.edges[e].second] += multiplicity[e];
    }
    return deg;
}

namespace {

// Restricted adjacency: per vertex, (neighbor, edge) pairs within the support.
std::vector<std::vector<std::pair<int, int>>> support_adjacency(const Graph& g,
                                                                const EdgeSubset& support) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
    for (int e : support) {
        auto [u, v] = g.edges[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    return adj;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g, const EdgeSubset& support) {
    auto adj = support_adjacency(g, support);
    const int n = g.vertex_count;

    BlockDecomposition bd;
    bd.blocks_per_vertex.assign(n, 0);

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    int timer = 0;

    // Iterative lowpoint DFS with an explicit frame stack.
    struct Frame {
        int v;
        int parent_edge;
        size_t next;
    };

    auto pop_block = [&](int until_edge) {
        EdgeSubset block;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until_edge) break;
        }
        std::sort(block.begin(), block.end());
        bd.blocks.push_back(std::move(block));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1 || adj[root].empty()) continue;
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.next < adj[fr.v].size()) {
                auto [w, e] = adj[fr.v][fr.next++];
                if (e == fr.parent_edge) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[fr.v]) {
                    edge_stack.push_back(e);
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                int v = fr.v;
                int pe = fr.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) pop_block(pe);
                }
            }
        }
    }

    // Membership counts determine cut vertices: a vertex in >= 2 blocks is cut.
    for (const auto& block : bd.blocks) {
        std::set<int> verts;
        for (int e : block) {
            verts.insert(g.edges[e].first);
            verts.insert(g.edges[e].second);
        }
        for (int v : verts) bd.blocks_per_vertex[v] += 1;
    }
    for (int v = 0; v < n; ++v)
        if (bd.blocks_per_vertex[v] >= 2) bd.cut_vertices.push_back(v);
    return bd;
}

std::vector<EdgeSubset> connected_components(const Graph& g, const EdgeSubset& support) {
    auto adj = support_adjacency(g, support);
    std::vector<bool> visited(g.vertex_count, false);
    std::vector<EdgeSubset> comps;
    for (int s = 0; s < g.vertex_count; ++s) {
        if (visited[s] || adj[s].empty()) continue;
        std::set<int> comp_edges;
        std::vector<int> queue{s};
        visited[s] = true;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (auto [w, e] : adj[v]) {
                comp_edges.insert(e);
                if (!visited[w]) {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comps.emplace_back(comp_edges.begin(), comp_edges.end());
    }
    return comps;
}

}  // namespace ugb
