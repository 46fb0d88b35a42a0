#include "ugb/binomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ugb/errors.hpp"

namespace ugb {

std::vector<int> a_degree(const Graph& g, const std::vector<int>& expo) {
    std::vector<int> deg(g.vertex_count, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (expo[e] == 0) continue;
        deg[g.edges[e].first] += expo[e];
        deg[g.edges[e].second] += expo[e];
    }
    return deg;
}

void validate_binomial(const Binomial& b, const Graph& g, int row) {
    const int m = g.edge_count();
    if (static_cast<int>(b.plus.size()) != m || static_cast<int>(b.minus.size()) != m)
        throw InvalidBinomialError(row, "exponent vector length does not match edge count");
    int dplus = 0, dminus = 0;
    for (int e = 0; e < m; ++e) {
        if (b.plus[e] < 0 || b.plus[e] > 2 || b.minus[e] < 0 || b.minus[e] > 2)
            throw InvalidBinomialError(row, "exponent out of range at edge e" + std::to_string(e + 1));
        if (b.plus[e] > 0 && b.minus[e] > 0)
            throw InvalidBinomialError(row, "supports not disjoint at edge e" + std::to_string(e + 1));
        dplus += b.plus[e];
        dminus += b.minus[e];
    }
    if (dplus == 0) throw InvalidBinomialError(row, "zero binomial");
    if (dplus != dminus) throw InvalidBinomialError(row, "monomial degrees differ");
    if (b.degree != dplus) throw InvalidBinomialError(row, "cached degree is stale");
    if (a_degree(g, b.plus) != a_degree(g, b.minus))
        throw InvalidBinomialError(row, "A-degrees do not balance");
}

Binomial walk_to_binomial(const Graph& g, const std::vector<int>& walk) {
    if (walk.empty())
        throw WalkError(WalkError::Kind::NotClosed, "empty walk");
    for (int e : walk)
        if (e < 0 || e >= g.edge_count())
            throw WalkError(WalkError::Kind::NotAWalk, "edge index out of range", 0);
    if (walk.size() % 2 != 0)
        throw WalkError(WalkError::Kind::OddLength,
                        "walk length " + std::to_string(walk.size()) + " is odd");

    // The first edge can be traversed in either direction; accept whichever
    // orientation yields a valid closed walk.
    auto trace = [&](int start, int& end) -> int {
        int cur = start;
        for (size_t i = 0; i < walk.size(); ++i) {
            auto [a, b] = g.edges[walk[i]];
            if (cur == a)
                cur = b;
            else if (cur == b)
                cur = a;
            else
                return static_cast<int>(i);
        }
        end = cur;
        return -1;
    };

    const auto [a0, b0] = g.edges[walk[0]];
    int best_fail = -1;
    bool walked = false;
    int chosen_start = -1;
    for (int start : {a0, b0}) {
        int end = -1;
        int fail = trace(start, end);
        if (fail >= 0) {
            best_fail = std::max(best_fail, fail);
            continue;
        }
        walked = true;
        if (end == start) {
            chosen_start = start;
            break;
        }
    }
    if (chosen_start == -1) {
        if (walked)
            throw WalkError(WalkError::Kind::NotClosed, "walk does not return to its start");
        throw WalkError(WalkError::Kind::NotAWalk,
                        "consecutive edges do not share a vertex at step " +
                            std::to_string(best_fail + 1),
                        best_fail);
    }

    Binomial b;
    b.plus.assign(g.edge_count(), 0);
    b.minus.assign(g.edge_count(), 0);
    for (size_t i = 0; i < walk.size(); ++i) {
        if (i % 2 == 0)
            b.plus[walk[i]] += 1;  // odd 1-based position
        else
            b.minus[walk[i]] += 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (b.plus[e] > 0 && b.minus[e] > 0)
            throw WalkError(WalkError::Kind::Reducible,
                            "edge e" + std::to_string(e + 1) + " lands in both monomials");
    b.degree = static_cast<int>(walk.size()) / 2;
    return b;
}

WalkGraph support_walkgraph(const Binomial& b, const Graph& g) {
    WalkGraph wg;
    wg.multiplicity.assign(g.edge_count(), 0);
    wg.parity.assign(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        int expo = b.plus[e] + b.minus[e];
        if (expo == 0) continue;
        if (expo > 2) throw ExponentTooLargeError(e);
        wg.support.push_back(e);
        wg.multiplicity[e] = expo;
        wg.parity[e] = b.plus[e] > 0 ? 1 : -1;
    }
    return wg;
}

namespace {

std::set<int> block_vertices(const Graph& g, const EdgeSubset& block) {
    std::set<int> verts;
    for (int e : block) {
        verts.insert(g.edges[e].first);
        verts.insert(g.edges[e].second);
    }
    return verts;
}

}  // namespace

PrimitivityResult is_primitive_structural(const WalkGraph& wg, const Graph& g) {
    PrimitivityResult r;
    if (wg.support.empty()) {
        r.reason = "empty support";
        return r;
    }
    if (connected_components(g, wg.support).size() != 1) {
        r.reason = "support is not connected";
        return r;
    }

    bool all_mult_one = true;
    for (int e : wg.support)
        if (wg.multiplicity[e] != 1) all_mult_one = false;

    auto deg = degrees(g, wg.support);
    bool all_deg_two = true;
    for (int v = 0; v < g.vertex_count; ++v)
        if (deg[v] != 0 && deg[v] != 2) all_deg_two = false;

    if (all_deg_two) {
        // Connected and 2-regular: a single cycle.
        if (wg.support.size() % 2 != 0) {
            r.reason = "support is a single odd cycle";
            r.offending_block = wg.support;
            return r;
        }
        if (!all_mult_one) {
            r.reason = "multiplicity-2 edge on a cycle";
            r.offending_block = wg.support;
            return r;
        }
        r.primitive = true;
        r.reason = "even cycle";
        return r;
    }

    auto bd = block_decomposition(g, wg.support);
    if (bd.blocks.size() < 2) {
        r.reason = "support is biconnected but not a cycle";
        r.offending_block = wg.support;
        return r;
    }

    const int nb = static_cast<int>(bd.blocks.size());
    std::vector<bool> cyclic(nb, false);
    std::vector<int> edge_block(g.edge_count(), -1);
    std::vector<std::set<int>> bverts(nb);
    for (int i = 0; i < nb; ++i) {
        bverts[i] = block_vertices(g, bd.blocks[i]);
        for (int e : bd.blocks[i]) edge_block[e] = i;
        if (bd.blocks[i].size() == 1) continue;  // cut edge
        if (bd.blocks[i].size() == bverts[i].size()) {
            cyclic[i] = true;
        } else {
            r.reason = "block is neither a cycle nor a cut edge";
            r.offending_block = bd.blocks[i];
            return r;
        }
    }

    for (int e : wg.support) {
        if (wg.multiplicity[e] == 2 && cyclic[edge_block[e]]) {
            r.reason = "multiplicity-2 edge lies in a cyclic block";
            r.offending_block = bd.blocks[edge_block[e]];
            return r;
        }
        if (wg.multiplicity[e] == 1 && !cyclic[edge_block[e]]) {
            r.reason = "multiplicity-1 edge is a cut edge";
            r.offending_block = bd.blocks[edge_block[e]];
            return r;
        }
    }

    std::vector<std::vector<int>> cut_blocks(g.vertex_count);
    std::vector<std::vector<int>> block_cuts(nb);
    for (int v : bd.cut_vertices)
        for (int i = 0; i < nb; ++i)
            if (bverts[i].count(v)) {
                cut_blocks[v].push_back(i);
                block_cuts[i].push_back(v);
            }

    for (int v : bd.cut_vertices) {
        if (bd.blocks_per_vertex[v] != 2) {
            r.reason = "cut vertex belongs to more than two blocks";
            r.offending_vertex = v;
            return r;
        }
        // The two parts separated by v, as block sets reached without crossing v.
        for (int side : cut_blocks[v]) {
            std::vector<bool> seen(nb, false);
            std::vector<int> frontier{side};
            seen[side] = true;
            long cyclic_edges = 0;
            while (!frontier.empty()) {
                int b = frontier.back();
                frontier.pop_back();
                if (cyclic[b]) cyclic_edges += static_cast<long>(bd.blocks[b].size());
                for (int w : block_cuts[b]) {
                    if (w == v) continue;
                    for (int nb2 : cut_blocks[w])
                        if (!seen[nb2]) {
                            seen[nb2] = true;
                            frontier.push_back(nb2);
                        }
                }
            }
            if (cyclic_edges % 2 == 0) {
                r.reason = "cut vertex separates an even count of cyclic-block edges";
                r.offending_vertex = v;
                return r;
            }
        }
    }

    r.primitive = true;
    r.reason = "block tree of cycles and cut edges with odd splits";
    return r;
}

namespace {

// All componentwise-dominated sub-vectors of `expo` (restricted to its
// support), as (A-degree, is_full) pairs; the zero sub-vector is skipped.
void enumerate_subvectors(const Graph& g, const std::vector<int>& expo,
                          std::vector<std::pair<std::vector<int>, bool>>& out) {
    std::vector<int> support;
    for (int e = 0; e < g.edge_count(); ++e)
        if (expo[e] > 0) support.push_back(e);

    std::vector<int> sub(support.size(), 0);
    std::vector<int> adeg(g.vertex_count, 0);
    int total = 0, full_total = 0;
    for (int e : support) full_total += expo[e];

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == support.size()) {
            if (total > 0) out.emplace_back(adeg, total == full_total);
            return;
        }
        int e = support[idx];
        auto [a, b] = g.edges[e];
        for (int k = 0; k <= expo[e]; ++k) {
            if (k > 0) {
                adeg[a] += 1;
                adeg[b] += 1;
                total += 1;
            }
            self(self, idx + 1);
        }
        adeg[a] -= expo[e];
        adeg[b] -= expo[e];
        total -= expo[e];
    };
    rec(rec, 0);
}

}  // namespace

bool is_primitive_bruteforce(const Binomial& b, const Graph& g, int max_support) {
    int support_size = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (b.plus[e] + b.minus[e] > 0) support_size += 1;
    if (support_size > max_support) throw SupportTooLargeError(max_support);

    std::vector<std::pair<std::vector<int>, bool>> minus_subs;
    enumerate_subvectors(g, b.minus, minus_subs);
    // count per A-degree, and whether the full minus vector carries it
    std::map<std::vector<int>, std::pair<int, bool>> minus_by_adeg;
    for (auto& [adeg, full] : minus_subs) {
        auto& entry = minus_by_adeg[adeg];
        entry.first += 1;
        entry.second = entry.second || full;
    }

    std::vector<std::pair<std::vector<int>, bool>> plus_subs;
    enumerate_subvectors(g, b.plus, plus_subs);
    for (auto& [adeg, full] : plus_subs) {
        auto it = minus_by_adeg.find(adeg);
        if (it == minus_by_adeg.end()) continue;
        auto [count, has_full] = it->second;
        // exclude only the pairing (plus, minus) itself
        if (full && has_full) count -= 1;
        if (count > 0) return false;
    }
    return true;
}

Binomial canonicalize(Binomial b) {
    if (b.minus > b.plus) std::swap(b.plus, b.minus);
    return b;
}

}  // namespace ugb
