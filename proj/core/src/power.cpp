#include "sumgraph/power.hpp"

namespace sumgraph {

Graph power_graph(const Graph& g, int h, const DistanceTable& table) {
    if (h < 1) throw GraphError("power exponent must be >= 1");
    const int n = g.vertex_count();
    std::vector<Bitset> rows(n, Bitset(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int32_t d = table.at(u, v);
            if (d != kUnreachable && d <= h) {
                rows[u].set(v);
                rows[v].set(u);
            }
        }
    return graph_from_rows(n, std::move(rows));
}

Graph power_graph(const Graph& g, int h) {
    if (h < 1) throw GraphError("power exponent must be >= 1");
    return power_graph(g, h, all_pairs_distances(g));
}

PowerProfile edge_growth(const Graph& g, int hmax) {
    if (hmax < 1) throw GraphError("profile depth must be >= 1");
    const int n = g.vertex_count();
    auto table = all_pairs_distances(g);

    // counts[d] = number of pairs at distance exactly d (d >= 1).
    std::vector<long> counts(size_t(n) + 1, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int32_t d = table.at(u, v);
            if (d != kUnreachable) ++counts[d];
        }

    PowerProfile profile;
    profile.n = n;
    profile.base_edges = g.edge_count();
    long total = 0;
    for (int h = 1; h <= hmax; ++h) {
        total += h <= n ? counts[h] : 0;
        profile.rows.push_back({h, total, total - profile.base_edges});
    }
    return profile;
}

}  // namespace sumgraph
