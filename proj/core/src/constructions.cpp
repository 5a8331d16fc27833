#include "sumgraph/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sumgraph {

Graph gdm(int d, int m) {
    if (d < 2) throw GraphError("gdm requires d >= 2");
    if (m < 2) throw GraphError("gdm requires m >= 2");
    const int block = d + 1;
    const int n = m * block;
    if (n > kMaxVertices) throw GraphError("gdm size exceeds vertex cap");

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        const int base = i * block;
        // Clique on the block minus the edge between the two distinguished
        // vertices (the block's first two indices).
        for (int u = 0; u < block; ++u)
            for (int v = u + 1; v < block; ++v)
                if (!(u == 0 && v == 1)) edges.emplace_back(base + u, base + v);
    }
    // Cyclic junctions {v_{i,1}, v_{i+1,2}} including the wrap edge.
    for (int i = 0; i < m; ++i) {
        int u = i * block;
        int v = ((i + 1) % m) * block + 1;
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return Graph::build(n, edges);
}

DiamExtremalParams diam_extremal_params(int d, int k) {
    if (d < 5 || d % 2 == 0)
        throw GraphError("diameter_extremal requires odd d >= 5");
    if (k < 0) throw GraphError("diameter_extremal requires k >= 0");
    DiamExtremalParams p;
    p.d = d;
    p.k = k;
    p.a = 3 * (k + 2);
    p.b = (k + 2) * (d - 2) + 2;
    p.n = p.a + p.b;
    return p;
}

Graph diameter_extremal(int d, int k) {
    const auto p = diam_extremal_params(d, k);
    const int a = p.a, b = p.b;
    // 1-based labels: v_i -> i-1, w_j -> a+j-1.
    auto V = [&](int i) { return i - 1; };
    auto W = [&](int j) { return a + j - 1; };

    std::set<Edge> edges;
    auto add = [&](int x, int y) {
        edges.insert({std::min(x, y), std::max(x, y)});
    };
    auto remove = [&](int x, int y) {
        edges.erase({std::min(x, y), std::max(x, y)});
    };

    // Type I: the path v_1 .. v_a.
    for (int i = 1; i < a; ++i) add(V(i), V(i + 1));
    // Type II: head triple to head clique, two exception edges omitted.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= d - 1; ++j) {
            if ((i == 2 && j == d - 1) || (i == 3 && j == 1)) continue;
            add(V(i), W(j));
        }
    // Type III: tail triple to tail clique, mirrored exceptions.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= d - 1; ++j) {
            int vi = a + 1 - i, wj = b + 1 - j;
            if ((vi == a - 1 && wj == b + 2 - d) || (vi == a - 2 && wj == b))
                continue;
            add(V(vi), W(wj));
        }
    // Type IV: interior triple r to middle block r.
    for (int r = 1; r <= k; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= d - 2; ++t)
                add(V(3 * r + s), W((d - 2) * r + 1 + t));
    // Type V: head clique minus a perfect matching on its interior.
    for (int j1 = 1; j1 <= d - 1; ++j1)
        for (int j2 = j1 + 1; j2 <= d - 1; ++j2) add(W(j1), W(j2));
    for (int j = 2; j + 1 <= d - 2; j += 2) remove(W(j), W(j + 1));
    // Type VI: tail clique minus a perfect matching on its interior.
    for (int j1 = b + 2 - d; j1 <= b; ++j1)
        for (int j2 = j1 + 1; j2 <= b; ++j2) add(W(j1), W(j2));
    for (int j = b + 3 - d; j + 1 <= b - 1; j += 2) remove(W(j), W(j + 1));
    // Type VII: middle blocks are cliques.
    for (int r = 1; r <= k; ++r) {
        int lo = r * (d - 2) + 2, hi = (r + 1) * (d - 2) + 1;
        for (int j1 = lo; j1 <= hi; ++j1)
            for (int j2 = j1 + 1; j2 <= hi; ++j2) add(W(j1), W(j2));
    }

    return Graph::build(p.n, {edges.begin(), edges.end()});
}

Graph circulant(int n, const ResidueSet& gens) {
    if (n < 1) throw GraphError("circulant requires n >= 1");
    if (gens.modulus() != n) throw GraphError("generator modulus differs from n");
    if (gens.contains(0)) throw GraphError("generator 0 would create loops");
    const ResidueSet sym = gens.symmetrized();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (sym.contains((v - u) % n)) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph circulant(int n, const std::vector<int>& gens) {
    if (n < 1) throw GraphError("circulant requires n >= 1");
    return circulant(n, ResidueSet(n, gens));
}

int clique_path_clique_size(int n) {
    int q = int(std::floor(std::pow(double(n), 0.75)));
    // Guard against floating-point undershoot at exact fourth powers.
    while (long(q + 1) * (q + 1) * (q + 1) * (q + 1) <= long(n) * n * n) ++q;
    while (long(q) * q * q * q > long(n) * n * n) --q;
    return q;
}

Graph clique_path(int n) {
    if (n < 4) throw GraphError("clique_path requires n >= 4");
    const int q = clique_path_clique_size(n);
    std::vector<Edge> edges;
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v) edges.emplace_back(u, v);
    for (int v = q; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, q);
    return Graph::build(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw GraphError("cycle requires n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph::build(n, edges);
}

Graph complete(int n) {
    if (n < 1) throw GraphError("complete requires n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph path(int n) {
    if (n < 1) throw GraphError("path requires n >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(n, edges);
}

}  // namespace sumgraph
