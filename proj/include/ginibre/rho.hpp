#pragma once

#include <utility>
#include <vector>

#include "ginibre/qsqrt2.hpp"

namespace ginibre {

// Dense square matrix over Q[sqrt2], just large enough for the [n/2]-sized
// rho matrices and their powers.
class QMatrix {
  public:
    explicit QMatrix(long size) : size_(size), e_(static_cast<size_t>(size * size)) {}

    static QMatrix identity(long size);

    long size() const { return size_; }
    QSqrt2& at(long i, long j) { return e_[static_cast<size_t>(i * size_ + j)]; }
    const QSqrt2& at(long i, long j) const { return e_[static_cast<size_t>(i * size_ + j)]; }

    QMatrix operator*(const QMatrix& o) const;
    QSqrt2 trace() const;

  private:
    long size_;
    std::vector<QSqrt2> e_;
};

enum class RhoFlavor { even, odd };

// The non-universal matrix rho, built exactly in Q[sqrt2].
struct RhoMatrix {
    long n;            // ensemble dimension
    RhoFlavor flavor;  // matches the parity of n
    QMatrix entries;   // [n/2] x [n/2]
};

// The (alpha, beta) entry of the even-flavor rho, reduced to a finite sum of
// moments: returns the list of (m, coefficient) with entry = sum c * I_m.
// Every residual power of y is a nonnegative odd integer 2m+1 by
// construction; violated only by a derivation bug, so it is asserted.
std::vector<std::pair<long, Rational>> rho_even_entry_terms(long alpha, long beta);

// Single even-flavor entry (column index may exceed [n/2]-1; the odd flavor
// needs one extra column).
QSqrt2 rho_even_entry(long alpha, long beta);

// rho for n = 2m even, size m; rejects odd or nonpositive n.
RhoMatrix rho_even(long n);

// rho for n = 2m+1 odd, size m; n = 1 yields the empty 0x0 matrix.
// Entries: rho^odd_{a,b} = rho^even_{a,b}
//          - (-4)^{m-b} (m!/(2m)!) ((2b)!/b!) rho^even_{a,m}.
RhoMatrix rho_odd(long n);

// rho of the flavor matching the parity of n.
RhoMatrix rho_matrix(long n);

// Exact power sums p_j = tr(rho^j) for j = 1 .. count.
std::vector<QSqrt2> power_sums(const RhoMatrix& rho, long count);

}  // namespace ginibre
