#include "sumgraph/search.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

namespace sumgraph {

namespace {

int triangle_bits(int n) { return n * (n - 1) / 2; }

struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<int> perm;
    std::vector<uint8_t> used;
    std::vector<uint8_t> cur;
    std::vector<uint8_t> best;

    explicit CanonicalSearch(const Graph& graph)
        : g(graph),
          n(graph.vertex_count()),
          perm(n),
          used(n, 0),
          cur(triangle_bits(n)),
          best(triangle_bits(n), 1) {}

    // tight: cur equals best on the filled prefix; once strictly below we
    // can stop comparing.
    void place(int k, int filled, bool tight) {
        if (k == n) {
            if (!tight) best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool now_tight = tight;
            bool worse = false;
            for (int i = 0; i < k; ++i) {
                uint8_t bit = g.has_edge(perm[i], v) ? 1 : 0;
                cur[filled + i] = bit;
                if (now_tight) {
                    if (bit > best[filled + i]) {
                        worse = true;
                        break;
                    }
                    if (bit < best[filled + i]) now_tight = false;
                }
            }
            if (worse) continue;
            perm[k] = v;
            used[v] = 1;
            place(k + 1, filled + k, now_tight);
            used[v] = 0;
        }
    }

    std::vector<uint8_t> run() {
        place(0, 0, true);
        return best;
    }
};

std::string bits_to_string(const std::vector<uint8_t>& bits) {
    std::string s(bits.size(), '0');
    for (size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? '1' : '0';
    return s;
}

std::vector<uint8_t> canonical_vec(const Graph& g) {
    if (g.vertex_count() > kCanonicalCap)
        throw GraphError("canonical form capped at n <= " +
                         std::to_string(kCanonicalCap));
    return CanonicalSearch(g).run();
}

}  // namespace

uint64_t canonical_bits(const Graph& g) {
    auto bits = canonical_vec(g);
    uint64_t code = 0;
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) code |= uint64_t{1} << i;
    return code;
}

std::string canonical_code(const Graph& g) {
    return bits_to_string(canonical_vec(g));
}

std::string labeled_code(const Graph& g) {
    const int n = g.vertex_count();
    std::string s;
    s.reserve(triangle_bits(n));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) s.push_back(g.has_edge(i, j) ? '1' : '0');
    return s;
}

Graph graph_from_labeled_code(int n, const std::string& code) {
    if (int(code.size()) != triangle_bits(n))
        throw GraphError("labeled code length mismatch");
    std::vector<Edge> edges;
    size_t pos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++pos)
            if (code[pos] == '1') edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

namespace {

struct Enumerator {
    int n, d, jobs, job;
    bool dedup;
    const std::function<bool(const Graph&)>& visit;
    std::vector<Bitset> adj;
    std::vector<int> deg;
    std::unordered_set<uint64_t> seen;
    uint64_t subtree = 0;
    bool stopped = false;

    Enumerator(int n_, int d_, bool dedup_,
               const std::function<bool(const Graph&)>& visit_, int jobs_,
               int job_)
        : n(n_), d(d_), jobs(jobs_), job(job_), dedup(dedup_), visit(visit_),
          adj(n_, Bitset(n_)), deg(n_, 0) {}

    void emit() {
        Graph g = graph_from_rows(n, adj);
        if (!is_connected(g)) return;
        if (dedup) {
            if (!seen.insert(canonical_bits(g)).second) return;
        }
        if (!visit(g)) stopped = true;
    }

    // u is the first vertex with deficient degree; its further neighbors
    // are chosen in increasing order starting at `start`, which makes each
    // labeled graph reachable exactly once.
    void extend(int u, int start) {
        if (stopped) return;
        while (u < n && deg[u] == d) {
            ++u;
            start = u + 1;
            // Partition boundary: vertex 0 just completed.
            if (u == 1 && jobs > 1 && (subtree++ % jobs) != uint64_t(job))
                return;
        }
        if (u == n) {
            emit();
            return;
        }
        int needed = d - deg[u];
        int available = 0;
        for (int v = start; v < n; ++v)
            if (deg[v] < d && !adj[u].test(v)) ++available;
        if (available < needed) return;

        for (int v = start; v < n && !stopped; ++v) {
            if (deg[v] >= d || adj[u].test(v)) continue;
            adj[u].set(v);
            adj[v].set(u);
            ++deg[u];
            ++deg[v];
            extend(u, v + 1);
            --deg[u];
            --deg[v];
            adj[u].reset(v);
            adj[v].reset(u);
            // Skipping v entirely: only viable if u can still be filled.
        }
    }
};

}  // namespace

void enumerate_connected_regular(
    int n, int d, bool dedup, const std::function<bool(const Graph&)>& visit,
    int jobs, int job) {
    if (n < 1 || d < 0 || d >= std::max(n, 1))
        throw GraphError("enumeration requires 0 <= d < n");
    if ((long(n) * d) % 2 != 0) throw GraphError("n*d must be even");
    if (dedup && n > kCanonicalCap)
        throw GraphError("dedup capped at n <= " +
                         std::to_string(kCanonicalCap));
    if (jobs < 1 || job < 0 || job >= jobs)
        throw GraphError("bad jobs/job partition");
    if (d == 0) {
        if (n == 1) visit(Graph::build(1, {}));
        return;  // n >= 2, d = 0 is never connected
    }
    Enumerator e(n, d, dedup, visit, jobs, job);
    e.extend(0, 1);
}

uint64_t split_seed(uint64_t master, uint64_t index) {
    // splitmix64 over the (master, index) pair.
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_connected_regular(int n, int d, uint64_t seed) {
    if (n < 1 || d < 0 || d >= n)
        throw GraphError("configuration model requires 0 <= d < n");
    if ((long(n) * d) % 2 != 0) throw GraphError("n*d must be even");

    std::mt19937_64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(size_t(n) * d);
    constexpr int kRetryCap = 1000;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);

        // Pair stubs one edge at a time, resampling the partner when a loop or
        // multi-edge would form; restart the attempt only when no legal partner
        // remains. Full-restart rejection dies off like exp(-d^2/4).
        std::vector<Bitset> adj(n, Bitset(n));
        bool ok = true;
        size_t live = stubs.size();
        while (ok && live > 0) {
            std::uniform_int_distribution<size_t> pick(0, live - 1);
            std::swap(stubs[pick(rng)], stubs[live - 1]);
            const int u = stubs[live - 1];
            bool paired = false;
            for (int tries = 0; tries < 64 && !paired; ++tries) {
                const size_t j = pick(rng) % (live - 1 == 0 ? 1 : live - 1);
                const int v = stubs[j];
                if (u == v || adj[u].test(v)) continue;
                adj[u].set(v);
                adj[v].set(u);
                std::swap(stubs[j], stubs[live - 2]);
                live -= 2;
                paired = true;
            }
            if (!paired) ok = false;
        }
        if (!ok) continue;
        Graph g = graph_from_rows(n, std::move(adj));
        if (is_connected(g)) return g;
    }
    throw GraphError("rejection cap exceeded for configuration model");
}

std::optional<SearchRecord> make_record(const Graph& g, Objective objective) {
    const long n = g.vertex_count();
    if (g.edge_count() == 0) return std::nullopt;
    const long full = n * (n - 1) / 2;

    // Single distance-table pass: totals, excesses and diameter together.
    const auto table = all_pairs_distances(g);
    long total2 = 0, total3 = 0;
    int diam = 0;
    bool connected = true;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int32_t dist = table.at(u, v);
            if (dist == kUnreachable) {
                connected = false;
                continue;
            }
            diam = std::max(diam, int(dist));
            if (dist <= 2) ++total2;
            if (dist <= 3) ++total3;
        }

    SearchRecord rec;
    rec.n = int(n);
    rec.d = min_degree(g);
    rec.edges = g.edge_count();
    rec.excess2 = total2 - rec.edges;
    rec.total3 = total3;
    rec.diameter = connected ? diam : -1;

    if (objective == Objective::kMin3Ratio) {
        if (rec.total3 == full) return std::nullopt;
        rec.objective = {rec.total3, rec.edges};
    } else {
        if (total2 == full) return std::nullopt;
        rec.objective = {rec.excess2, n};
    }
    return rec;
}

namespace {

// Cheap total order used while scanning; canon is attached only to the
// survivors.
struct PendingRecord {
    SearchRecord rec;
    std::string code;  // labeled code

    friend bool operator<(const PendingRecord& a, const PendingRecord& b) {
        if (!(a.rec.objective == b.rec.objective))
            return a.rec.objective < b.rec.objective;
        if (a.rec.n != b.rec.n) return a.rec.n < b.rec.n;
        return a.code < b.code;
    }
};

class TopK {
public:
    explicit TopK(size_t cap) : cap_(cap) {}

    void offer(PendingRecord&& p) {
        if (set_.size() == cap_ && !(p < *std::prev(set_.end()))) return;
        set_.insert(std::move(p));
        if (set_.size() > cap_) set_.erase(std::prev(set_.end()));
    }

    void merge(TopK&& other) {
        for (auto& p : other.set_) offer(PendingRecord(p));
    }

    std::vector<PendingRecord> take() {
        return {set_.begin(), set_.end()};
    }

private:
    size_t cap_;
    std::multiset<PendingRecord> set_;
};

std::vector<SearchRecord> finalize(std::vector<PendingRecord> pending) {
    std::vector<SearchRecord> out;
    out.reserve(pending.size());
    for (auto& p : pending) {
        if (p.rec.n <= kCanonicalCap) {
            Graph g = graph_from_labeled_code(p.rec.n, p.code);
            p.rec.canon = canonical_code(g);
        } else {
            p.rec.canon = p.code;
        }
        out.push_back(std::move(p.rec));
    }
    std::sort(out.begin(), out.end(),
              [](const SearchRecord& a, const SearchRecord& b) {
                  if (!(a.objective == b.objective))
                      return a.objective < b.objective;
                  if (a.n != b.n) return a.n < b.n;
                  return a.canon < b.canon;
              });
    return out;
}

}  // namespace

std::vector<SearchRecord> extremal_scan(const std::vector<Graph>& candidates,
                                        Objective objective, int top_k) {
    TopK top(size_t(std::max(top_k, 0)));
    for (const auto& g : candidates)
        if (auto rec = make_record(g, objective))
            top.offer({std::move(*rec), labeled_code(g)});
    return finalize(top.take());
}

std::vector<SearchRecord> extremal_scan(const ScanSource& source,
                                        Objective objective, int top_k) {
    const int jobs = std::max(source.jobs, 1);
    std::vector<TopK> locals(jobs, TopK(size_t(std::max(top_k, 0))));

    auto worker = [&](int job) {
        TopK& top = locals[job];
        auto consider = [&](const Graph& g) {
            if (auto rec = make_record(g, objective))
                top.offer({std::move(*rec), labeled_code(g)});
            return true;
        };
        if (source.kind == ScanSource::Kind::kExhaustive) {
            enumerate_connected_regular(source.n, source.d, source.dedup,
                                        consider, jobs, job);
        } else {
            for (int i = job; i < source.count; i += jobs)
                consider(random_connected_regular(
                    source.n, source.d, split_seed(source.seed, uint64_t(i))));
        }
    };

    if (source.kind == ScanSource::Kind::kExhaustive && source.dedup && jobs > 1)
        throw GraphError("dedup scan is single-job (shared seen-set)");

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
        for (auto& t : threads) t.join();
    }

    TopK merged(size_t(std::max(top_k, 0)));
    for (auto& l : locals) merged.merge(std::move(l));
    return finalize(merged.take());
}

}  // namespace sumgraph
