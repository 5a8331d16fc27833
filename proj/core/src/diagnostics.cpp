#include "sumgraph/diagnostics.hpp"

#include <algorithm>

namespace sumgraph {

std::vector<int> excess_neighbors(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw GraphError("vertex out of range");
    auto dist = bfs_distances(g, v);
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (dist[u] == 2) out.push_back(u);
    return out;
}

std::vector<int> v1_membership(const Graph& g, double eps1) {
    auto d = regular_degree(g);
    if (!d) throw GraphError("v1_membership requires a regular graph");
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (double(excess_neighbors(g, v).size()) < eps1 * *d) out.push_back(v);
    return out;
}

Decomposition vertex_decomposition(const Graph& g, int v, double eps1) {
    if (v < 0 || v >= g.vertex_count())
        throw GraphError("vertex out of range");
    if (!is_connected(g))
        throw GraphError("vertex_decomposition requires connectivity");

    Decomposition dec;
    dec.v = v;
    auto reg = regular_degree(g);
    const int d = reg ? *reg : min_degree(g);
    dec.extended_semantics = !reg;

    auto dist = bfs_distances(g, v);
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        if (dist[u] == 1)
            dec.A.push_back(u);
        else if (dist[u] == 2)
            dec.C.push_back(u);
        else
            dec.D.push_back(u);
    }

    Bitset in_d(n);
    for (int u : dec.D) in_d.set(u);

    int max_back = 0;
    for (int c : dec.C) {
        Bitset nb = g.neighbors(c);
        Bitset touch = nb;
        touch &= in_d;
        if (touch.any()) {
            dec.scriptC.push_back(c);
            Bitset into_a = nb;
            into_a &= g.neighbors(v);
            max_back = std::max(max_back, into_a.count());
        }
    }

    if (dec.C.empty() || dec.D.empty()) {
        dec.case_tag = CaseTag::kSaturated;
    } else {
        if (!dec.scriptC.empty())
            dec.alpha = (1.0 - eps1) / double(d) * double(max_back);
        if (dec.alpha && *dec.alpha > 0.5)
            dec.case_tag = CaseTag::kCase2;
        else
            dec.case_tag = CaseTag::kCase1;
    }
    return dec;
}

GeodesicCut geodesic_cut(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw GraphError("geodesic_cut requires n >= 2");
    auto table = all_pairs_distances(g);
    const int diam = diameter(g, table);  // throws when disconnected

    GeodesicCut cut;
    bool found = false;
    for (int u = 0; u < n && !found; ++u)
        for (int w = u + 1; w < n && !found; ++w)
            if (table.at(u, w) == diam) {
                cut.u = u;
                cut.w = w;
                found = true;
            }

    // Walk from w back toward u, always taking the smallest-index neighbor
    // that stays on a shortest path.
    std::vector<int> rev{cut.w};
    int cur = cut.w;
    while (cur != cut.u) {
        int next = -1;
        g.neighbors(cur).for_each([&](int x) {
            if (next == -1 && table.at(cut.u, x) == table.at(cut.u, cur) - 1)
                next = x;
        });
        cur = next;
        rev.push_back(cur);
    }
    cut.path.assign(rev.rbegin(), rev.rend());

    Bitset on_path(n);
    for (int x : cut.path) on_path.set(x);
    for (int x = 0; x < n; ++x)
        if (!on_path.test(x)) cut.B.push_back(x);

    long eab = 0;
    for (int x : cut.path)
        g.neighbors(x).for_each([&](int y) {
            if (!on_path.test(y)) ++eab;
        });
    cut.eAB = eab;

    const long d = min_degree(g);
    cut.lower = long(diam + 1) * (d - 2) + 2;
    cut.upper = 3 * long(cut.B.size());
    return cut;
}

}  // namespace sumgraph
