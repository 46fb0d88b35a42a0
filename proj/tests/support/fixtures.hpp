#ifndef UGB_TEST_FIXTURES_HPP
#define UGB_TEST_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "ugb/binomial.hpp"
#include "ugb/graph.hpp"

namespace ugb::fixtures {

// Graph from 1-based endpoint pairs.
inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges1) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edges1.size());
    for (auto [u, v] : edges1) edges.emplace_back(u - 1, v - 1);
    return build_graph(n, edges);
}

inline Graph c4() { return make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

// Central triangle {1,2,3} with an outer triangle hanging at each of its
// vertices; edge order matches the 12-step walk e1..e12.
inline Graph triforce() {
    return make_graph(9, {{1, 4}, {4, 5}, {5, 1},    // outer at 1: e1 e2 e3
                          {1, 2},                    // central: e4
                          {2, 6}, {6, 7}, {7, 2},    // outer at 2: e5 e6 e7
                          {2, 3},                    // central: e8
                          {3, 8}, {8, 9}, {9, 3},    // outer at 3: e9 e10 e11
                          {3, 1}});                  // central: e12
}

inline std::vector<int> triforce_walk() {
    return {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
}

// Two triangles sharing vertex 1.
inline Graph bowtie() {
    return make_graph(5, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}});
}

inline std::vector<int> bowtie_walk() { return {0, 1, 2, 3, 4, 5}; }

// Triangles {1,2,3} and {4,5,6} joined by the bridge {3,4}; the 8-step walk
// crosses the bridge twice.
inline Graph bridged_triangles() {
    return make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {3, 1}});
}

inline std::vector<int> bridged_triangles_walk() { return {0, 1, 2, 3, 4, 5, 2, 6}; }

// Chain of k 4-cycles, consecutive squares joined by a single path edge.
inline Graph square_chain(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        int base = 4 * i;
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base + 1, base + 2);
        edges.emplace_back(base + 2, base + 3);
        edges.emplace_back(base + 3, base);
        if (i > 0) edges.emplace_back(base - 2, base);  // path edge between squares
    }
    return build_graph(4 * k, edges);
}

// Random connected simple graph: spanning tree plus extra edges.
inline Graph random_connected(std::mt19937& rng, int n, int m) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> used_pair(candidates.size(), 0);
    auto pair_index = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return u * (2 * n - u - 1) / 2 + (v - u - 1);
    };
    for (int i = 1; i < n; ++i) {
        int u = order[i];
        int v = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
        edges.emplace_back(u, v);
        used_pair[pair_index(u, v)] = 1;
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (auto [u, v] : candidates) {
        if (static_cast<int>(edges.size()) >= m) break;
        if (used_pair[pair_index(u, v)]) continue;
        used_pair[pair_index(u, v)] = 1;
        edges.emplace_back(u, v);
    }
    return build_graph(n, edges);
}

}  // namespace ugb::fixtures

#endif
