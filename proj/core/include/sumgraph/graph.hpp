#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sumgraph/bitset.hpp"

namespace sumgraph {

using Edge = std::pair<int, int>;

// All graph sizes are capped at desk scale; bitset rows stay a handful of
// cache lines each.
inline constexpr int kMaxVertices = 4096;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable undirected simple graph: symmetric, loopless, no multi-edges.
// Invariants are checked on every construction path.
class Graph {
public:
    // Strict: loops, out-of-range endpoints and duplicate edges are errors.
    static Graph build(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    long edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    const Bitset& neighbors(int v) const { return adj_[v]; }

    // Edges as sorted (u, v) pairs with u < v.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    Graph(int n, std::vector<Bitset> adj, long m)
        : n_(n), adj_(std::move(adj)), m_(m) {}

    int n_ = 0;
    std::vector<Bitset> adj_;
    long m_ = 0;

    friend Graph graph_from_rows(int n, std::vector<Bitset> rows);
};

// Internal fast path for algorithmic producers (powers, enumeration). Rows
// must already be symmetric and irreflexive; verified in debug builds.
Graph graph_from_rows(int n, std::vector<Bitset> rows);

inline constexpr int kUnreachable = -1;

// n x n hop-distance matrix; kUnreachable marks cross-component pairs.
class DistanceTable {
public:
    DistanceTable(int n, std::vector<int32_t> dist)
        : n_(n), dist_(std::move(dist)) {}

    int size() const { return n_; }
    int32_t at(int u, int v) const { return dist_[size_t(u) * n_ + v]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

private:
    int n_;
    std::vector<int32_t> dist_;
};

bool is_connected(const Graph& g);

// d if every degree equals d, otherwise nullopt. Errors on the empty graph.
std::optional<int> regular_degree(const Graph& g);
int min_degree(const Graph& g);

// Single-source hop distances (plain BFS), kUnreachable off-component.
std::vector<int32_t> bfs_distances(const Graph& g, int source);

DistanceTable all_pairs_distances(const Graph& g);

// Requires connectivity; n = 1 has diameter 0.
int diameter(const Graph& g);
int diameter(const Graph& g, const DistanceTable& table);

// Edge-list text format: header "n m", then m lines "u v" with u < v,
// sorted lexicographically. Strict: any deviation is an error with a line
// number.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

}  // namespace sumgraph
