#include "ugb/filter.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "ugb/errors.hpp"
#include "ugb/io.hpp"

namespace ugb {

namespace {

WalkGraph checked_walkgraph(const Binomial& b, const Graph& g) {
    try {
        return support_walkgraph(b, g);
    } catch (const ExponentTooLargeError& e) {
        throw MalformedInputError(std::string("corrupted binomial: ") + e.what());
    }
}

}  // namespace

std::pair<bool, FilterTrace> filter_element(const Binomial& b, const Graph& g) {
    FilterTrace tr;
    WalkGraph wg = checked_walkgraph(b, g);
    const int n = g.vertex_count;

    // Working copy: the support as a simple graph, doubled edges once.
    std::vector<char> active(g.edge_count(), 0);
    for (int e : wg.support) active[e] = 1;
    std::vector<int> deg = degrees(g, wg.support);
    int remaining = static_cast<int>(wg.support.size());
    long& steps = tr.step_count;

    // unique in a simple graph
    auto edge_between = [&](int u, int v) -> int {
        for (auto [w, e] : g.adjacency[u]) {
            ++steps;
            if (w == v) return e;
        }
        return -1;
    };

    auto erase = [&](const EdgeSubset& dead) {
        for (int e : dead) {
            ++steps;
            active[e] = 0;
            deg[g.edges[e].first] -= 1;
            deg[g.edges[e].second] -= 1;
            remaining -= 1;
        }
    };

    while (remaining > 0) {
        int start = -1;
        for (int v = 0; v < n; ++v) {
            ++steps;
            if (deg[v] == 2) {
                start = v;
                break;
            }
        }
        if (start == -1) break;  // cut edges alone remain

        // Trace from the degree-2 vertex along consecutive edges until a
        // vertex repeats or a degree-1 vertex is reached.
        std::vector<int> trace{start};
        int dup_pos = -1;
        int j = -1;
        while (true) {
            int cur = trace.back();
            int prev = trace.size() >= 2 ? trace[trace.size() - 2] : -1;
            j = -1;
            for (auto [u, e] : g.adjacency[cur]) {
                ++steps;
                if (!active[e] || u == prev) continue;
                if (j == -1 || u < j) j = u;
            }
            trace.push_back(j);
            dup_pos = -1;
            for (size_t i = 0; i + 1 < trace.size(); ++i) {
                ++steps;
                if (trace[i] == j) {
                    dup_pos = static_cast<int>(i);
                    break;
                }
            }
            if (dup_pos >= 0 || deg[j] == 1) break;
        }

        if (dup_pos < 0) {
            // Ended at a cut edge: walk back until a vertex still on a cycle
            // (degree >= 3) or the trace start, deleting the dangling path.
            EdgeSubset path;
            int r = static_cast<int>(trace.size()) - 1;
            while (true) {
                ++steps;
                path.push_back(edge_between(trace[r - 1], trace[r]));
                r -= 1;
                if (r == 0 || deg[trace[r]] >= 3) break;
            }
            std::sort(path.begin(), path.end());
            erase(path);
            tr.deleted_cut_edges.push_back(std::move(path));
        } else {
            // Cycle between the two occurrences of the repeated vertex;
            // the entry tail before dup_pos stays.
            EdgeSubset cycle;
            for (int i = dup_pos; i + 1 < static_cast<int>(trace.size()); ++i) {
                ++steps;
                cycle.push_back(edge_between(trace[i], trace[i + 1]));
            }
            std::sort(cycle.begin(), cycle.end());
            bool all_plus = true, all_minus = true;
            for (int e : cycle) {
                ++steps;
                (wg.parity[e] == 1 ? all_minus : all_plus) = false;
            }
            if (all_plus || all_minus) {
                tr.accepted = false;
                tr.rejecting_cycle = std::move(cycle);
                tr.rejecting_side = all_plus ? 1 : -1;
                return {false, tr};
            }
            erase(cycle);
            tr.peeled_cycles.push_back(std::move(cycle));
        }
    }

    tr.accepted = true;
    return {true, tr};
}

MixedResult is_mixed_blocks(const Binomial& b, const Graph& g) {
    WalkGraph wg = checked_walkgraph(b, g);
    auto bd = block_decomposition(g, wg.support);
    for (const auto& block : bd.blocks) {
        if (block.size() < 2) continue;  // cut edge
        bool has_plus = false, has_minus = false;
        for (int e : block) (wg.parity[e] == 1 ? has_plus : has_minus) = true;
        if (!has_plus || !has_minus) return {false, block, has_plus ? 1 : -1};
    }
    return {true, {}, 0};
}

namespace {

bool edge_set_acyclic(const Graph& g, const std::vector<int>& expo) {
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (expo[e] == 0) continue;
        int a = find(g.edges[e].first), b = find(g.edges[e].second);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

}  // namespace

bool is_mixed_forest(const Binomial& b, const Graph& g) {
    return edge_set_acyclic(g, b.plus) && edge_set_acyclic(g, b.minus);
}

UgbResult universal_groebner_basis(const BasisSet& basis, const Graph& g,
                                   bool verify, int workers) {
    const int k = basis.size();
    UgbResult result;
    result.traces.resize(k);
    std::vector<char> accepted(k, 0);
    std::vector<std::string> mismatch(k);

    auto run_range = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            const Binomial& b = basis.elements[i];
            auto [acc, tr] = filter_element(b, g);
            result.traces[i] = std::move(tr);
            accepted[i] = acc;
            if (verify) {
                MixedResult blocks = is_mixed_blocks(b, g);
                bool forest = is_mixed_forest(b, g);
                if (blocks.mixed != acc || forest != acc)
                    mismatch[i] = "filter=" + std::to_string(acc) +
                                  " blocks=" + std::to_string(blocks.mixed) +
                                  " forest=" + std::to_string(forest) + " for " +
                                  format_binomial(b, FormatStyle::monomial);
            }
        }
    };

    if (workers <= 1 || k == 0) {
        run_range(0, k);
    } else {
        workers = std::min(workers, k);
        std::vector<std::thread> pool;
        int chunk = (k + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int lo = w * chunk, hi = std::min(k, lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    for (int i = 0; i < k; ++i)
        if (!mismatch[i].empty()) throw OracleMismatchError("mixedness oracles disagree: " + mismatch[i]);

    result.basis.source = basis.source;
    for (int i = 0; i < k; ++i)
        if (accepted[i]) result.basis.elements.push_back(basis.elements[i]);
    return result;
}

}  // namespace ugb
