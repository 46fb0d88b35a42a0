#include "ugb/graver.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "ugb/errors.hpp"

namespace ugb {

int default_max_degree(int vertex_count) {
    return vertex_count >= 4 ? vertex_count - 2 : 2;
}

namespace {

// BFS distances from every vertex; used to prune walk branches that cannot
// return to their start within the remaining length budget.
std::vector<std::vector<int>> all_pairs_distance(const Graph& g) {
    const int n = g.vertex_count;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, n + 1));
    for (int s = 0; s < n; ++s) {
        dist[s][s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : g.adjacency[v])
                if (dist[s][w] > dist[s][v] + 1) {
                    dist[s][w] = dist[s][v] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

struct WalkSearch {
    const Graph& g;
    const EnumerationLimits& limits;
    int max_len;
    std::vector<std::vector<int>> dist;
    std::vector<int> use;           // per-edge traversal count, <= 2
    std::vector<std::int8_t> par;   // parity of first traversal
    std::vector<int> walk;
    long nodes = 0;
    int start = 0;
    std::set<Binomial>* out;

    void emit() {
        // Orientation canonicalization: keep the representation whose first
        // edge index is not larger than its last; the reverse walk carries
        // the same binomial up to sign.
        if (walk.front() > walk.back()) return;
        Binomial b;
        b.plus.assign(g.edge_count(), 0);
        b.minus.assign(g.edge_count(), 0);
        for (size_t i = 0; i < walk.size(); ++i) {
            if (i % 2 == 0)
                b.plus[walk[i]] += 1;
            else
                b.minus[walk[i]] += 1;
        }
        b.degree = static_cast<int>(walk.size()) / 2;
        out->insert(canonicalize(std::move(b)));
    }

    void dfs(int v, int len) {
        for (auto [u, e] : g.adjacency[v]) {
            if (u < start) continue;  // walks start at their minimal vertex
            if (use[e] == 2) continue;
            std::int8_t p = (len % 2 == 0) ? std::int8_t{1} : std::int8_t{-1};
            if (use[e] == 1 && par[e] != p) continue;  // would be reducible
            int nl = len + 1;
            if (nl > max_len) continue;
            if (dist[u][start] > max_len - nl) continue;
            if (++nodes > limits.max_walks) throw LimitExceededError(limits.max_walks);
            use[e] += 1;
            par[e] = p;
            walk.push_back(e);
            if (u == start && nl >= 4 && nl % 2 == 0) emit();
            if (nl < max_len) dfs(u, nl);
            walk.pop_back();
            use[e] -= 1;
        }
    }
};

}  // namespace

BasisSet enumerate_walk_binomials(const Graph& g, EnumerationLimits limits) {
    if (limits.max_degree <= 0) limits.max_degree = default_max_degree(g.vertex_count);
    std::set<Binomial> found;
    WalkSearch search{g, limits, 2 * limits.max_degree, all_pairs_distance(g),
                      std::vector<int>(g.edge_count(), 0),
                      std::vector<std::int8_t>(g.edge_count(), 0)};
    search.out = &found;
    for (int s = 0; s < g.vertex_count; ++s) {
        search.start = s;
        search.dfs(s, 0);
    }
    BasisSet basis;
    basis.source = BasisSet::Source::enumerated;
    basis.elements.assign(found.begin(), found.end());
    return basis;
}

BasisSet graver_basis(const Graph& g, EnumerationLimits limits) {
    if (limits.max_degree <= 0) limits.max_degree = default_max_degree(g.vertex_count);
    BasisSet all = enumerate_walk_binomials(g, limits);
    BasisSet out;
    out.source = BasisSet::Source::enumerated;
    for (const auto& b : all.elements) {
        auto wg = support_walkgraph(b, g);
        bool structural = is_primitive_structural(wg, g).primitive;
        if (static_cast<int>(wg.support.size()) <= limits.max_edges_support) {
            bool brute = is_primitive_bruteforce(b, g, limits.max_edges_support);
            if (brute != structural)
                throw OracleMismatchError(
                    "primitivity oracles disagree (structural=" +
                    std::to_string(structural) + ", brute-force=" + std::to_string(brute) + ")");
        }
        if (structural) out.elements.push_back(b);
    }
    return out;
}

std::map<int, int> degree_histogram(const BasisSet& basis) {
    std::map<int, int> hist;
    for (const auto& b : basis.elements) hist[b.degree] += 1;
    return hist;
}

}  // namespace ugb
