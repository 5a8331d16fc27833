#include "sumgraph/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <deque>
#include <sstream>

namespace sumgraph {

namespace {

void check_invariants(int n, const std::vector<Bitset>& adj, long m) {
#ifndef NDEBUG
    long total = 0;
    for (int v = 0; v < n; ++v) {
        assert(!adj[v].test(v));
        total += adj[v].count();
        adj[v].for_each([&](int u) { assert(adj[u].test(v)); });
    }
    assert(total == 2 * m);
#else
    (void)n;
    (void)adj;
    (void)m;
#endif
}

}  // namespace

Graph Graph::build(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    if (n > kMaxVertices)
        throw GraphError("vertex count exceeds cap of " +
                         std::to_string(kMaxVertices));
    std::vector<Bitset> adj(n, Bitset(n));
    long m = 0;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" +
                             std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
        if (adj[u].test(v))
            throw GraphError("duplicate edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
        adj[u].set(v);
        adj[v].set(u);
        ++m;
    }
    check_invariants(n, adj, m);
    return Graph(n, std::move(adj), m);
}

Graph graph_from_rows(int n, std::vector<Bitset> rows) {
    long total = 0;
    for (int v = 0; v < n; ++v) total += rows[v].count();
    long m = total / 2;
    check_invariants(n, rows, m);
    return Graph(n, std::move(rows), m);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

std::vector<int32_t> bfs_distances(const Graph& g, int source) {
    const int n = g.vertex_count();
    std::vector<int32_t> dist(n, kUnreachable);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        g.neighbors(v).for_each([&](int u) {
            if (dist[u] == kUnreachable) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        });
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

std::optional<int> regular_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw GraphError("empty graph has no degree");
    int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw GraphError("empty graph has no degree");
    int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
    return d;
}

DistanceTable all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int32_t> dist(size_t(n) * n, kUnreachable);
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), dist.begin() + size_t(s) * n);
    }
    return DistanceTable(n, std::move(dist));
}

int diameter(const Graph& g, const DistanceTable& table) {
    const int n = g.vertex_count();
    if (n == 0) throw GraphError("diameter of empty graph");
    int32_t best = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int32_t d = table.at(u, v);
            if (d == kUnreachable) throw GraphError("infinite diameter");
            best = std::max(best, d);
        }
    return best;
}

int diameter(const Graph& g) { return diameter(g, all_pairs_distances(g)); }

namespace {

struct LineReader {
    const std::string& text;
    size_t pos = 0;
    int line_no = 0;

    // Returns false at end of input. LF line endings only.
    bool next(std::string& out) {
        if (pos >= text.size()) return false;
        size_t nl = text.find('\n', pos);
        if (nl == std::string::npos)
            throw GraphError("line " + std::to_string(line_no + 1) +
                             ": missing trailing newline");
        out = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw GraphError("line " + std::to_string(line_no) + ": " + msg);
    }
};

std::pair<long, long> parse_int_pair(LineReader& r, const std::string& line) {
    long a = 0, b = 0;
    const char* begin = line.data();
    const char* end = begin + line.size();
    auto [p1, ec1] = std::from_chars(begin, end, a);
    if (ec1 != std::errc{} || p1 == end || *p1 != ' ') r.fail("expected \"<int> <int>\"");
    auto [p2, ec2] = std::from_chars(p1 + 1, end, b);
    if (ec2 != std::errc{} || p2 != end) r.fail("expected \"<int> <int>\"");
    return {a, b};
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    LineReader reader{text};
    std::string line;
    if (!reader.next(line)) throw GraphError("line 1: missing header");
    auto [n, m] = parse_int_pair(reader, line);
    if (n < 0 || n > kMaxVertices) reader.fail("vertex count out of range");
    if (m < 0) reader.fail("negative edge count");

    std::vector<Edge> edges;
    edges.reserve(size_t(m));
    Edge prev{-1, -1};
    for (long i = 0; i < m; ++i) {
        if (!reader.next(line))
            throw GraphError("edge count mismatch: header says " +
                             std::to_string(m) + ", got " + std::to_string(i));
        auto [u, v] = parse_int_pair(reader, line);
        if (u < 0 || v < 0 || u >= n || v >= n) reader.fail("vertex out of range");
        if (u >= v) reader.fail("edge must satisfy u < v");
        Edge e{int(u), int(v)};
        if (!(prev < e)) reader.fail("edges not sorted");
        prev = e;
        edges.emplace_back(e);
    }
    if (reader.next(line))
        reader.fail("trailing content after " + std::to_string(m) + " edges");
    return Graph::build(int(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace sumgraph
