#pragma once

#include <cstdint>
#include <vector>

#include "ginibre/qsqrt2.hpp"

namespace ginibre {

// An integer partition in frequency representation: distinct parts in
// strictly decreasing order, each with its multiplicity.
struct Partition {
    struct Term {
        long part;
        long multiplicity;
    };
    std::vector<Term> terms;

    long size() const {
        long s = 0;
        for (const auto& t : terms) s += t.part * t.multiplicity;
        return s;
    }
    long distinct_parts() const { return static_cast<long>(terms.size()); }
};

// All partitions of `ell` in reverse-lexicographic order ([ell], ..., [1^ell]).
// ell = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(long ell);

// p(ell) by the Euler pentagonal-number recurrence (test oracle for the
// enumeration count).
mpz_class partition_count(long ell);

// F_ell evaluated as the explicit sum over partitions of ell:
//   F_ell = (-1)^ell sum_{|lambda|=ell} prod_j (1/sigma_j!) (-p_{l_j}/l_j)^{sigma_j}
// Exact when T is exact. Requires p.size() >= ell.
template <typename T>
T zonal_F(long ell, const std::vector<T>& p) {
    T total(0);
    for (const Partition& lam : enumerate_partitions(ell)) {
        T prod(1);
        for (const auto& t : lam.terms) {
            T base = -(p[static_cast<size_t>(t.part) - 1] / T(t.part));
            long fact = 1;
            for (long i = 1; i <= t.multiplicity; ++i) {
                prod = prod * base;
                fact *= i;
            }
            prod = prod / T(fact);
        }
        total = total + prod;
    }
    if (ell % 2 != 0) total = -total;
    return total;
}

// e_ell from power sums via the Newton-identity recurrence
//   e_l = (1/l) sum_{r=1}^{l} (-1)^{r-1} p_r e_{l-r}.
// Agrees with zonal_F on every input; kept as an independent route.
template <typename T>
T elementary_from_powersums(long ell, const std::vector<T>& p) {
    std::vector<T> e;
    e.push_back(T(1));
    for (long l = 1; l <= ell; ++l) {
        T acc(0);
        for (long r = 1; r <= l; ++r) {
            T term = p[static_cast<size_t>(r) - 1] * e[static_cast<size_t>(l - r)];
            if (r % 2 == 0) term = -term;
            acc = acc + term;
        }
        e.push_back(acc / T(l));
    }
    return e[static_cast<size_t>(ell)];
}

}  // namespace ginibre
