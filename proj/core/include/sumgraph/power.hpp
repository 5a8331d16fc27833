#pragma once

#include <vector>

#include "sumgraph/graph.hpp"

namespace sumgraph {

struct PowerRow {
    int h;
    long total;   // |hE|
    long excess;  // |hE \ E|
};

// Growth table of edge counts of the h-fold powers of one base graph.
struct PowerProfile {
    int n = 0;
    long base_edges = 0;
    std::vector<PowerRow> rows;
};

// h-th power: edge {u,v} iff 1 <= dist(u,v) <= h. Disconnected inputs are
// fine; cross-component pairs never become edges. h past the diameter just
// saturates.
Graph power_graph(const Graph& g, int h);
Graph power_graph(const Graph& g, int h, const DistanceTable& table);

// One row per h = 1..hmax, all from a single distance table.
PowerProfile edge_growth(const Graph& g, int hmax);

}  // namespace sumgraph
