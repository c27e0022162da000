#include "lyap/linalg.hpp"

#include <cmath>

namespace lyap {

SquareMatrix commutator(const SquareMatrix& x, const SquareMatrix& y)
{
    return x * y - y * x;
}

ThetaOmega split_theta_omega(const SquareMatrix& a)
{
    if (!all_finite(a))
        throw DomainError("split_theta_omega: non-finite entry");
    const std::size_t n = a.size();
    ThetaOmega out{SquareMatrix(n), SquareMatrix(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.theta(i, j) = 0.5 * (a(i, j) + a(j, i));
            // A - theta rather than (A - Aᵀ)/2 so that theta + omega == A exactly.
            out.omega(i, j) = a(i, j) - out.theta(i, j);
        }
    return out;
}

double psi2(double u)
{
    const double a = std::abs(u);
    if (a < kPsi2SeriesSwitch) {
        const double a2 = a * a;
        return 1.0 + a2 * (1.0 / 3.0 + a2 * (-1.0 / 45.0 + a2 * (2.0 / 945.0)));
    }
    if (a > kPsi2Asymptote)
        return a;
    // coth(a) = 1 + 2/(e^{2a} - 1)
    return a * (1.0 + 2.0 / std::expm1(2.0 * a));
}

} // namespace lyap
