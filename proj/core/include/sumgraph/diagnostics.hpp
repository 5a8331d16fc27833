#pragma once

#include <optional>
#include <vector>

#include "sumgraph/graph.hpp"

namespace sumgraph {

enum class CaseTag { kCase1, kCase2, kSaturated };

// Per-vertex shell decomposition: {v} + A + C + D partitions the vertex
// set, with A the neighbors, C the distance-2 shell and D everything
// further out. scriptC collects members of C with a neighbor in D; alpha
// is (1 - eps1)/d times the largest |N(c) & A| over scriptC.
struct Decomposition {
    int v = 0;
    std::vector<int> A;
    std::vector<int> C;
    std::vector<int> D;
    std::vector<int> scriptC;
    std::optional<double> alpha;
    CaseTag case_tag = CaseTag::kSaturated;
    // Set when the graph is not regular and d falls back to the minimum
    // degree, outside the regular-only setting the quantities come from.
    bool extended_semantics = false;
};

// Vertices at hop distance exactly 2 from v (the gain of the 2-power).
std::vector<int> excess_neighbors(const Graph& g, int v);

// {v : |T_v| < eps1 * d}; regular graphs only.
std::vector<int> v1_membership(const Graph& g, double eps1);

Decomposition vertex_decomposition(const Graph& g, int v, double eps1);

// Edge count across a diametral geodesic, with the two counting bounds
// (delta+1)(d-2)+2 <= e(A,B) <= 3|B| evaluated at d = minimum degree.
struct GeodesicCut {
    int u = 0, w = 0;        // lexicographically smallest diametral pair
    std::vector<int> path;   // shortest u-w path, smallest-index tie-break
    std::vector<int> B;      // complement of the path vertex set
    long eAB = 0;
    long lower = 0;
    long upper = 0;
};

GeodesicCut geodesic_cut(const Graph& g);

}  // namespace sumgraph
