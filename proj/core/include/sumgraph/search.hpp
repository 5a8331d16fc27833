#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sumgraph/graph.hpp"

namespace sumgraph {

// Largest n for which brute-force canonical labeling is allowed.
inline constexpr int kCanonicalCap = 10;

// Minimum adjacency bit-string over all vertex permutations; identical for
// isomorphic graphs. Bits are the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... n <= kCanonicalCap.
uint64_t canonical_bits(const Graph& g);
std::string canonical_code(const Graph& g);

// The same bit order under the identity labeling; any n.
std::string labeled_code(const Graph& g);
Graph graph_from_labeled_code(int n, const std::string& code);

// All labeled connected d-regular graphs on n vertices, by backtracking
// over ordered adjacency completion. With dedup, one representative per
// isomorphism class (n <= kCanonicalCap). Visitor returns false to stop.
//
// jobs/job select a deterministic partition of the search tree (subtrees
// are assigned round-robin as vertex 0 completes); (1, 0) is the whole
// tree.
void enumerate_connected_regular(
    int n, int d, bool dedup, const std::function<bool(const Graph&)>& visit,
    int jobs = 1, int job = 0);

// Configuration model with rejection: pair half-edges uniformly, reject
// loops, multi-edges and disconnected outcomes. Deterministic in
// (n, d, seed); throws after 1000 rejected pairings.
Graph random_connected_regular(int n, int d, uint64_t seed);

// Deterministic per-candidate sub-seed so parallel and serial scans see
// identical random graphs.
uint64_t split_seed(uint64_t master, uint64_t index);

enum class Objective { kMin3Ratio, kMin2Excess };

struct Rational {
    long num = 0;
    long den = 1;

    double approx() const { return double(num) / double(den); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
};

struct SearchRecord {
    std::string canon;  // canonical code when n <= kCanonicalCap, else labeled
    int n = 0;
    int d = 0;
    long edges = 0;
    long excess2 = 0;
    long total3 = 0;
    int diameter = 0;
    Rational objective;
};

// Metrics for one candidate; empty when the graph saturates under the
// objective (its relevant power is already complete) or has no edges.
std::optional<SearchRecord> make_record(const Graph& g, Objective objective);

struct ScanSource {
    enum class Kind { kExhaustive, kRandom } kind = Kind::kExhaustive;
    int n = 0;
    int d = 0;
    bool dedup = false;    // exhaustive only
    int count = 0;         // random only
    uint64_t seed = 0;     // random only
    int jobs = 1;
};

// Ranked ascending by (objective, n, canon); at most top_k records.
std::vector<SearchRecord> extremal_scan(const ScanSource& source,
                                        Objective objective, int top_k = 100);
std::vector<SearchRecord> extremal_scan(const std::vector<Graph>& candidates,
                                        Objective objective, int top_k = 100);

}  // namespace sumgraph
