#pragma once

#include <vector>

#include "sumgraph/graph.hpp"
#include "sumgraph/sumset.hpp"
#include "sumgraph/verdict.hpp"

namespace sumgraph {

// Enclosure of the unique positive root of eps = (1 - sqrt(eps))^3 / 4.
struct EpsilonBracket {
    double lo = 0;
    double hi = 0;

    double midpoint() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    double eps1() const;  // sqrt of the midpoint
};

double epsilon_residual(double eps);  // eps - (1 - sqrt(eps))^3 / 4

// Bisection on [0, 0.25] to the requested width; tol in (0, 0.1).
EpsilonBracket epsilon_star(double tol);

// |3E| >= min{ C(n,2), (1+eps)|E| } for connected regular graphs.
// Non-regular or disconnected input is an error; callers that want a
// NOT-APPLICABLE verdict filter first.
Verdict check_thm15(const Graph& g);

// Cayley-graph growth over Z_p: builds circulant(p, A \ {0}) and checks
// |hE| >= min{ C(p,2), h|E| } for each h = 1..hmax. Requires 0 in A,
// A = -A, A != {0}, p prime.
std::vector<Verdict> check_thm14(long p, const ResidueSet& a, int hmax);

// diam(g) <= (3n - (d+3)) / (d+1) with d the minimal degree; compared in
// exact integer arithmetic.
Verdict check_prop16(const Graph& g);

struct Conj18Stat {
    bool applicable = false;  // 2-power is not complete
    long excess2 = 0;         // |2E \ E|
    double per_n = 0;
    bool trivial_bound_ok = true;  // excess2 >= n/2, checked when n >= d+2
};

// Measured statistic only; the conjectured (2 - o_d(1)) n bound is not
// asserted. Requires connected regular input.
Conj18Stat conj18_stat(const Graph& g);

}  // namespace sumgraph
