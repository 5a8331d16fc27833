#pragma once

#include "sumgraph/graph.hpp"
#include "sumgraph/sumset.hpp"

namespace sumgraph {

// Block construction G_{d,m}: m blocks of d+1 vertices, each a clique minus
// the edge between its two distinguished vertices, joined cyclically. The
// result is connected, d-regular, n = m(d+1), |E| = dn/2.
//
// Blocks occupy consecutive index ranges; the distinguished vertices of
// block i are its first two indices.
Graph gdm(int d, int m);

struct DiamExtremalParams {
    int d;
    int k;
    int a;  // path length; 3(k+2)
    int b;  // (k+2)(d-2)+2
    int n;  // a+b
};

DiamExtremalParams diam_extremal_params(int d, int k);

// d-regular graph (d odd, >= 5) whose diameter meets the minimal-degree
// diameter bound with equality: a path of a vertices glued to head, middle
// and tail cliques on the remaining b vertices. Vertices 0..a-1 are the
// path; a..n-1 the clique side.
//
// The path must have room for disjoint head and tail triples plus one
// interior triple per middle block, which forces a = 3(k+2); with the
// printed a = 3(k+1) the edge types collide and regularity fails.
Graph diameter_extremal(int d, int k);

// Circulant (Cayley graph of Z_n): edge {u,v} iff (v-u) mod n is a
// generator. Generators are symmetrized automatically; 0 is rejected
// (loops are excluded by construction).
Graph circulant(int n, const ResidueSet& gens);
Graph circulant(int n, const std::vector<int>& gens);

// Clique on floor(n^{3/4}) vertices plus a pendant path, attached by a
// single edge; dense overall yet the powers grow by only Theta(n) edges.
Graph clique_path(int n);

int clique_path_clique_size(int n);

Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1
Graph path(int n);      // n >= 1

}  // namespace sumgraph
