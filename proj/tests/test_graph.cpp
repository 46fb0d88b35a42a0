#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "ugb/errors.hpp"
#include "ugb/graph.hpp"

using namespace ugb;
namespace fx = ugb::fixtures;

namespace {

EdgeSubset full_support(const Graph& g) {
    EdgeSubset s(g.edge_count());
    std::iota(s.begin(), s.end(), 0);
    return s;
}

}  // namespace

TEST_CASE("build_graph basics") {
    Graph c4 = fx::c4();
    CHECK(c4.vertex_count == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.edges[3] == std::pair<int, int>{0, 3});

    CHECK(fx::triforce().edge_count() == 12);

    CHECK_THROWS_AS(fx::make_graph(4, {{1, 2}, {1, 2}}), DuplicateEdgeError);
    CHECK_THROWS_AS(fx::make_graph(4, {{2, 1}, {1, 2}}), DuplicateEdgeError);
    CHECK_THROWS_AS(fx::make_graph(4, {{2, 2}}), SelfLoopError);
    CHECK_THROWS_AS(fx::make_graph(3, {{1, 4}}), VertexOutOfRangeError);
}

TEST_CASE("incidence_vector") {
    Graph c4 = fx::c4();
    CHECK(incidence_vector(c4, 0) == std::vector<int>{1, 1, 0, 0});
    CHECK(incidence_vector(c4, 3) == std::vector<int>{1, 0, 0, 1});
    Graph k4 = fx::complete(4);
    // edge {2,3} (1-based) = {1,2} 0-based
    int e = -1;
    for (int i = 0; i < k4.edge_count(); ++i)
        if (k4.edges[i] == std::pair<int, int>{1, 2}) e = i;
    CHECK(incidence_vector(k4, e) == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("degrees") {
    Graph c4 = fx::c4();
    CHECK(degrees(c4, full_support(c4)) == std::vector<int>{2, 2, 2, 2});

    Graph tri = fx::triforce();
    auto deg = degrees(tri, full_support(tri));
    for (int v = 0; v < 3; ++v) CHECK(deg[v] == 4);  // central cut vertices
    for (int v = 3; v < 9; ++v) CHECK(deg[v] == 2);

    Graph bow = fx::bowtie();
    auto bdeg = degrees(bow, full_support(bow));
    CHECK(bdeg == std::vector<int>{4, 2, 2, 2, 2});

    // with multiplicities: bridge counted twice
    Graph bt = fx::bridged_triangles();
    std::vector<int> mult(bt.edge_count(), 1);
    mult[2] = 2;  // bridge {3,4}
    auto mdeg = degrees(bt, full_support(bt), mult);
    CHECK(mdeg[2] == 4);
    CHECK(mdeg[3] == 4);
    long sum = std::accumulate(mdeg.begin(), mdeg.end(), 0L);
    CHECK(sum == 2L * (bt.edge_count() + 1));
}

TEST_CASE("block_decomposition fixtures") {
    Graph c4 = fx::c4();
    auto bd = block_decomposition(c4, full_support(c4));
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0] == EdgeSubset{0, 1, 2, 3});
    CHECK(bd.cut_vertices.empty());

    Graph bow = fx::bowtie();
    auto bbd = block_decomposition(bow, full_support(bow));
    CHECK(bbd.blocks.size() == 2);
    CHECK(bbd.cut_vertices == std::vector<int>{0});
    for (const auto& block : bbd.blocks) CHECK(block.size() == 3);

    Graph tri = fx::triforce();
    auto tbd = block_decomposition(tri, full_support(tri));
    CHECK(tbd.blocks.size() == 4);
    CHECK(tbd.cut_vertices == std::vector<int>{0, 1, 2});
    bool found_central = false;
    for (const auto& block : tbd.blocks)
        if (block == EdgeSubset{3, 7, 11}) found_central = true;
    CHECK(found_central);
}

TEST_CASE("connected_components") {
    Graph c4 = fx::c4();
    CHECK(connected_components(c4, {0, 1, 2}).size() == 1);

    Graph two = fx::make_graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
    CHECK(connected_components(two, full_support(two)).size() == 2);

    Graph tri = fx::triforce();
    EdgeSubset outer;
    for (int e = 0; e < 12; ++e)
        if (e != 3 && e != 7 && e != 11) outer.push_back(e);
    CHECK(connected_components(tri, outer).size() == 3);
}

TEST_CASE("block partition and cut-vertex properties on random supports") {
    std::mt19937 rng(20260823);
    for (int it = 0; it < 40; ++it) {
        int n = std::uniform_int_distribution<int>(4, 9)(rng);
        int maxm = std::min(14, n * (n - 1) / 2);
        int m = std::uniform_int_distribution<int>(n - 1, maxm)(rng);
        Graph g = fx::random_connected(rng, n, m);

        EdgeSubset support;
        for (int e = 0; e < g.edge_count(); ++e)
            if (std::bernoulli_distribution(0.7)(rng)) support.push_back(e);

        auto bd = block_decomposition(g, support);

        // blocks partition the support edge set
        std::set<int> covered;
        size_t total = 0;
        for (const auto& block : bd.blocks) {
            total += block.size();
            covered.insert(block.begin(), block.end());
        }
        CHECK(total == support.size());
        CHECK(covered == std::set<int>(support.begin(), support.end()));

        // a vertex is cut iff removing it splits its component (definition check)
        for (const auto& comp : connected_components(g, support)) {
            std::set<int> verts;
            for (int e : comp) {
                verts.insert(g.edges[e].first);
                verts.insert(g.edges[e].second);
            }
            for (int v : verts) {
                std::vector<int> parent(g.vertex_count);
                std::iota(parent.begin(), parent.end(), 0);
                auto find = [&](int x) {
                    while (parent[x] != x) x = parent[x] = parent[parent[x]];
                    return x;
                };
                int pieces = static_cast<int>(verts.size()) - 1;
                for (int e : comp) {
                    auto [a, b] = g.edges[e];
                    if (a == v || b == v) continue;
                    if (find(a) != find(b)) {
                        parent[find(a)] = find(b);
                        --pieces;
                    }
                }
                bool cut_by_definition = pieces > 1;
                bool cut_reported = bd.blocks_per_vertex[v] >= 2;
                CHECK(cut_by_definition == cut_reported);
            }
        }

        // degree sum identity
        auto deg = degrees(g, support);
        CHECK(std::accumulate(deg.begin(), deg.end(), 0L) ==
              2L * static_cast<long>(support.size()));
    }
}
