#include "sumgraph/sumset.hpp"

#include <stdexcept>

namespace sumgraph {

ResidueSet::ResidueSet(int modulus, const std::vector<int>& values)
    : n_(modulus), members_(modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    for (int v : values) {
        if (v < 0 || v >= modulus)
            throw std::invalid_argument("residue " + std::to_string(v) +
                                        " out of range mod " +
                                        std::to_string(modulus));
        members_.set(v);
    }
}

bool ResidueSet::is_symmetric() const { return *this == negated(); }

ResidueSet ResidueSet::negated() const {
    Bitset out(n_);
    members_.for_each([&](int r) { out.set((n_ - r) % n_); });
    return ResidueSet(FromBits{}, n_, std::move(out));
}

ResidueSet ResidueSet::symmetrized() const {
    auto neg = negated();
    Bitset out = members_;
    out |= neg.members_;
    return ResidueSet(FromBits{}, n_, std::move(out));
}

ResidueSet ResidueSet::without(int r) const {
    Bitset out = members_;
    out.reset(r);
    return ResidueSet(FromBits{}, n_, std::move(out));
}

ResidueSet sumset_h(const ResidueSet& a, int h) {
    if (a.empty()) throw std::invalid_argument("sumset of empty set");
    if (h < 1) throw std::invalid_argument("sumset order must be >= 1");
    const int n = a.modulus();
    Bitset acc = a.members();
    for (int step = 1; step < h; ++step) {
        Bitset next(n);
        a.members().for_each([&](int r) { next |= acc.rotated(r); });
        acc = std::move(next);
    }
    return ResidueSet(n, acc.to_vector());
}

BasisResult is_basis(const ResidueSet& a) {
    if (a.empty()) throw std::invalid_argument("basis test of empty set");
    const int n = a.modulus();
    for (int h = 1; h <= n; ++h)
        if (sumset_h(a, h).size() == n) return {true, h};
    return {false, 0};
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

long cd_bound(long p, long setsize, long h) {
    return std::min(p, h * setsize - (h - 1));
}

std::vector<Verdict> check_cauchy_davenport(long p, const ResidueSet& a,
                                            int hmax) {
    if (!is_prime(p)) throw std::invalid_argument("p not prime");
    if (a.modulus() != p) throw std::invalid_argument("set modulus differs from p");
    if (a.empty()) throw std::invalid_argument("empty set");
    if (hmax < 1) throw std::invalid_argument("hmax must be >= 1");

    std::vector<Verdict> out;
    for (int h = 1; h <= hmax; ++h) {
        long lhs = sumset_h(a, h).size();
        long linear = h * long(a.size()) - (h - 1);
        long rhs = std::min(p, linear);
        Verdict v;
        v.name = "cauchy-davenport h=" + std::to_string(h);
        v.lhs = double(lhs);
        v.rhs = double(rhs);
        v.branch = rhs == p && p <= linear ? "p" : "linear";
        v.holds = lhs >= rhs;
        v.details = "|A|=" + std::to_string(a.size()) + " mod " + std::to_string(p);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace sumgraph
