#pragma once

#include <string>
#include <vector>

#include "sumgraph/bitset.hpp"
#include "sumgraph/verdict.hpp"

namespace sumgraph {

// Subset of Z_n.
class ResidueSet {
public:
    ResidueSet(int modulus, const std::vector<int>& values);

    int modulus() const { return n_; }
    int size() const { return members_.count(); }
    bool empty() const { return members_.none(); }
    bool contains(int r) const { return members_.test(r); }
    const Bitset& members() const { return members_; }
    std::vector<int> values() const { return members_.to_vector(); }

    bool is_symmetric() const;  // A = -A mod n
    ResidueSet negated() const;
    ResidueSet symmetrized() const;  // A union -A
    ResidueSet without(int r) const;

    friend bool operator==(const ResidueSet& a, const ResidueSet& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

private:
    struct FromBits {};
    ResidueSet(FromBits, int modulus, Bitset members)
        : n_(modulus), members_(std::move(members)) {}

    int n_;
    Bitset members_;
};

// h-fold sumset via shift-or convolution of membership bitsets.
ResidueSet sumset_h(const ResidueSet& a, int h);

struct BasisResult {
    bool is_basis;
    int h;  // smallest h with hA = Z_n; 0 when not a basis
};

// A is a basis iff some h-fold sumset covers Z_n; h <= n suffices.
BasisResult is_basis(const ResidueSet& a);

bool is_prime(long p);

// min{p, h|A| - (h-1)}.
long cd_bound(long p, long setsize, long h);

// One verdict per h = 1..hmax against the Cauchy-Davenport bound.
std::vector<Verdict> check_cauchy_davenport(long p, const ResidueSet& a,
                                            int hmax);

}  // namespace sumgraph
