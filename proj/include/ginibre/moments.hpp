#pragma once

#include <vector>

#include "ginibre/qsqrt2.hpp"

namespace ginibre {

// Exact values of the elementary integrals
//   I_m = int_0^inf y^{2m+1} e^{y^2} erfc(y sqrt2) dy,
// computed by the integration-by-parts recursion
//   I_0 = (sqrt2 - 1)/2,
//   I_m = -m I_{m-1} + sqrt2 (2m)! / (2 * 4^m * m!).
// The recursion is cross-checked against adaptive quadrature in the tests.
class MomentTable {
  public:
    explicit MomentTable(long max_m);

    const QSqrt2& operator[](long m) const { return values_.at(static_cast<size_t>(m)); }
    long max_m() const { return static_cast<long>(values_.size()) - 1; }

  private:
    std::vector<QSqrt2> values_;
};

// Single moment I_m.
QSqrt2 moment_I(long m);

}  // namespace ginibre
