#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "lyap/errors.hpp"
#include "lyap/matrix.hpp"

namespace lyap {

/// Eigendecomposition of a symmetric matrix: values in descending order and
/// an orthogonal basis whose columns are the matching unit eigenvectors.
template <class T>
struct BasicSymEigen {
    std::vector<T> values;
    BasicMatrix<T> basis;
};

using SymEigen = BasicSymEigen<double>;

inline constexpr double kDefaultEigenTol = 1e-14;
inline constexpr int kJacobiSweepCap = 100;
inline constexpr double kSymmetryTol = 1e-12;

template <class T>
T frobenius_norm(const BasicMatrix<T>& x)
{
    using std::sqrt;
    T s(0);
    for (const auto& v : x.data())
        s += v * v;
    return sqrt(s);
}

template <class T>
T max_asymmetry(const BasicMatrix<T>& s)
{
    using std::abs;
    T worst(0);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            worst = std::max<T>(worst, abs(s(i, j) - s(j, i)));
    return worst;
}

namespace detail {

template <class T>
T off_diagonal_norm(const BasicMatrix<T>& a)
{
    using std::sqrt;
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j)
                s += a(i, j) * a(i, j);
    return sqrt(s);
}

// One Jacobi rotation annihilating a(p,q), accumulated into v.
template <class T>
void rotate(BasicMatrix<T>& a, BasicMatrix<T>& v, std::size_t p, std::size_t q)
{
    using std::abs;
    using std::sqrt;
    const T apq = a(p, q);
    if (apq == T(0))
        return;
    const T theta = (a(q, q) - a(p, p)) / (T(2) * apq);
    T t;
    if (abs(theta) > T(1e150))
        t = T(1) / (T(2) * theta);
    else
        t = (theta >= T(0) ? T(1) : T(-1)) / (abs(theta) + sqrt(theta * theta + T(1)));
    const T c = T(1) / sqrt(t * t + T(1));
    const T s = t * c;

    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q)
            continue;
        const T arp = a(r, p);
        const T arq = a(r, q);
        a(r, p) = a(p, r) = c * arp - s * arq;
        a(r, q) = a(q, r) = s * arp + c * arq;
    }
    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = a(q, p) = T(0);

    for (std::size_t k = 0; k < n; ++k) {
        const T vkp = v(k, p);
        const T vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

} // namespace detail

/// Cyclic Jacobi eigensolver for symmetric matrices.
///
/// Sweeps over (p,q) pairs in row order until the off-diagonal Frobenius norm
/// drops to tol·‖S‖ or the sweep cap is reached. Eigenvalues come out sorted
/// descending (stable for ties) and each eigenvector is signed so that its
/// first largest-magnitude component is positive.
template <class T>
BasicSymEigen<T> sym_eigh(const BasicMatrix<T>& s, T tol)
{
    using std::abs;
    if (s.empty())
        throw DimensionError("sym_eigh: empty matrix");
    if (!(tol > T(0)))
        throw Error("sym_eigh: tolerance must be positive");
    if (const T asym = max_asymmetry(s); asym > T(kSymmetryTol)) {
        std::ostringstream os;
        os << "sym_eigh: input not symmetric (max |S_ij - S_ji| = "
           << static_cast<double>(asym) << ")";
        throw SymmetryError(os.str());
    }

    const std::size_t n = s.size();
    BasicMatrix<T> a = s.symmetrized();
    BasicMatrix<T> v = BasicMatrix<T>::identity(n);
    const T target = tol * frobenius_norm(s);

    bool converged = false;
    for (int sweep = 0; sweep <= kJacobiSweepCap; ++sweep) {
        if (detail::off_diagonal_norm(a) <= target) {
            converged = true;
            break;
        }
        if (sweep == kJacobiSweepCap)
            break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                detail::rotate(a, v, p, q);
    }
    if (!converged) {
        const double residual = static_cast<double>(detail::off_diagonal_norm(a));
        std::ostringstream os;
        os << "sym_eigh: no convergence after " << kJacobiSweepCap
           << " sweeps, off-diagonal residual " << residual;
        throw ConvergenceError(os.str(), residual);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    BasicSymEigen<T> out{std::vector<T>(n), BasicMatrix<T>(n)};
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t src = order[c];
        out.values[c] = a(src, src);

        T biggest(0);
        for (std::size_t k = 0; k < n; ++k)
            biggest = std::max<T>(biggest, abs(v(k, src)));
        std::size_t lead = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (abs(v(k, src)) >= biggest * T(1 - 1e-10)) {
                lead = k;
                break;
            }
        const T sign = v(lead, src) < T(0) ? T(-1) : T(1);
        for (std::size_t k = 0; k < n; ++k)
            out.basis(k, c) = sign * v(k, src);
    }
    return out;
}

inline SymEigen sym_eigh(const SquareMatrix& s, double tol = kDefaultEigenTol)
{
    return sym_eigh<double>(s, tol);
}

/// [X, Y] = XY - YX
SquareMatrix commutator(const SquareMatrix& x, const SquareMatrix& y);

/// Symmetric and antisymmetric parts of a matrix: A = theta + omega.
struct ThetaOmega {
    SquareMatrix theta;
    SquareMatrix omega;
};

ThetaOmega split_theta_omega(const SquareMatrix& a);

/// Below this |u| psi2 uses its even Taylor polynomial.
inline constexpr double kPsi2SeriesSwitch = 1e-3;
/// Above this |u| psi2 returns |u| (coth(u) == 1 in double precision).
inline constexpr double kPsi2Asymptote = 350.0;

/// psi2(u) = u·coth(u), continued to 1 at u = 0.
double psi2(double u);

inline double frobenius_norm(const SquareMatrix& x) { return frobenius_norm<double>(x); }

/// Q·diag(values)·Qᵀ
template <class T>
BasicMatrix<T> reconstruct(const BasicSymEigen<T>& e)
{
    const std::size_t n = e.values.size();
    BasicMatrix<T> r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            T s(0);
            for (std::size_t k = 0; k < n; ++k)
                s += e.basis(i, k) * e.values[k] * e.basis(j, k);
            r(i, j) = s;
        }
    return r;
}

} // namespace lyap
