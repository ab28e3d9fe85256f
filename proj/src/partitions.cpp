#include "ginibre/partitions.hpp"

#include <stdexcept>

namespace ginibre {

namespace {

void gen(long remaining, long max_part, std::vector<long>& stack,
         std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p;
        for (long part : stack) {
            if (!p.terms.empty() && p.terms.back().part == part) {
                ++p.terms.back().multiplicity;
            } else {
                p.terms.push_back({part, 1});
            }
        }
        out.push_back(std::move(p));
        return;
    }
    // Largest first part first gives reverse-lexicographic order overall.
    for (long part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        gen(remaining - part, part, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long ell) {
    if (ell < 0) throw std::invalid_argument("enumerate_partitions: ell < 0");
    std::vector<Partition> out;
    std::vector<long> stack;
    gen(ell, ell == 0 ? 1 : ell, stack, out);
    return out;
}

mpz_class partition_count(long ell) {
    if (ell < 0) throw std::invalid_argument("partition_count: ell < 0");
    std::vector<mpz_class> p(static_cast<size_t>(ell) + 1);
    p[0] = 1;
    for (long n = 1; n <= ell; ++n) {
        mpz_class acc = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            int sign = (k % 2 != 0) ? 1 : -1;
            if (g1 <= n) acc += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) acc += sign * p[static_cast<size_t>(n - g2)];
        }
        p[static_cast<size_t>(n)] = acc;
    }
    return p[static_cast<size_t>(ell)];
}

}  // namespace ginibre
