#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "lyap/linalg.hpp"
#include "reference.hpp"

using namespace lyap;

namespace {

double orthogonality_defect(const SquareMatrix& q)
{
    return ref::max_abs_diff(q.transpose() * q, SquareMatrix::identity(q.size()));
}

} // namespace

TEST_CASE("sym_eigh on identity and diagonal input")
{
    const SymEigen e = sym_eigh(SquareMatrix::identity(3));
    CHECK(e.values == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(e.basis == SquareMatrix::identity(3));

    const SymEigen d = sym_eigh(SquareMatrix{{2.0, 0.0}, {0.0, -1.0}});
    CHECK(d.values == std::vector<double>{2.0, -1.0});
    CHECK(d.basis == SquareMatrix::identity(2));
}

TEST_CASE("sym_eigh on the 2x2 swap matrix")
{
    const SymEigen e = sym_eigh(SquareMatrix{{0.0, 1.0}, {1.0, 0.0}});
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e.values[1] == doctest::Approx(-1.0).epsilon(1e-15));
    const double r = 1.0 / std::sqrt(2.0);
    // first column (1,1)/√2; second (1,-1)/√2 up to the sign convention
    CHECK(std::abs(e.basis(0, 0) - r) < 1e-15);
    CHECK(std::abs(e.basis(1, 0) - r) < 1e-15);
    CHECK(std::abs(std::abs(e.basis(0, 1)) - r) < 1e-15);
    CHECK(std::abs(e.basis(0, 1) + e.basis(1, 1)) < 1e-15);
}

TEST_CASE("sym_eigh: largest-magnitude component of each eigenvector is positive")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const SquareMatrix s = ref::random_symmetric(rng, 5, -10, 10);
        const SymEigen e = sym_eigh(s);
        for (std::size_t c = 0; c < 5; ++c) {
            std::size_t arg = 0;
            for (std::size_t r = 1; r < 5; ++r)
                if (std::abs(e.basis(r, c)) > std::abs(e.basis(arg, c)))
                    arg = r;
            CHECK(e.basis(arg, c) > 0.0);
        }
        CHECK(sym_eigh(s).basis == e.basis);
    }
}

TEST_CASE("sym_eigh reconstruction and orthogonality on random input, n <= 6")
{
    std::mt19937_64 rng(2024);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            const SquareMatrix s = ref::random_symmetric(rng, n, -10, 10);
            const SymEigen e = sym_eigh(s);
            CHECK(orthogonality_defect(e.basis) <= 1e-12);
            const double rel =
                ref::frobenius(reconstruct(e) - s) / std::max(ref::frobenius(s), 1e-300);
            CHECK(rel <= 1e-10);
            CHECK(std::is_sorted(e.values.begin(), e.values.end(), std::greater<>()));
        }
}

TEST_CASE("sym_eigh agrees with characteristic-polynomial roots for n <= 3")
{
    std::mt19937_64 rng(7);
    for (std::size_t n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 100; ++trial) {
            const SquareMatrix s = ref::random_symmetric(rng, n, -10, 10);
            const auto expect = ref::charpoly_eigenvalues(s);
            const auto got = sym_eigh(s).values;
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::abs(got[i] - expect[i]) <= 1e-8);
        }
}

TEST_CASE("sym_eigh rejects asymmetric input and bad tolerances")
{
    SquareMatrix s{{1.0, 2.0}, {2.0 + 1e-9, 1.0}};
    CHECK_THROWS_AS(sym_eigh(s), SymmetryError);
    s(1, 0) = 2.0 + 1e-13;
    CHECK_NOTHROW(sym_eigh(s));
    CHECK_THROWS_AS(sym_eigh(SquareMatrix::identity(2), 0.0), Error);
}

TEST_CASE("commutator")
{
    std::mt19937_64 rng(3);
    const SquareMatrix x = ref::random_matrix(rng, 3, -1, 1);
    CHECK(max_abs(commutator(x, x)) == 0.0);

    const SquareMatrix d{{1.0, 0.0}, {0.0, 2.0}};
    CHECK(max_abs(commutator(d, SquareMatrix::identity(2))) == 0.0);

    const SquareMatrix up{{0.0, 1.0}, {0.0, 0.0}};
    const SquareMatrix lo{{0.0, 0.0}, {1.0, 0.0}};
    CHECK(commutator(up, lo) == SquareMatrix{{1.0, 0.0}, {0.0, -1.0}});

    CHECK_THROWS_AS(commutator(up, SquareMatrix::identity(3)), DimensionError);
}

TEST_CASE("commutator is traceless")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const SquareMatrix x = ref::random_matrix(rng, n, -10, 10);
        const SquareMatrix y = ref::random_matrix(rng, n, -10, 10);
        CHECK(std::abs(commutator(x, y).trace()) <=
              1e-12 * ref::frobenius(x) * ref::frobenius(y));
    }
}

TEST_CASE("split_theta_omega")
{
    const SquareMatrix sym{{1.0, 2.0}, {2.0, 3.0}};
    auto [t1, w1] = split_theta_omega(sym);
    CHECK(t1 == sym);
    CHECK(max_abs(w1) == 0.0);

    const SquareMatrix anti{{0.0, 2.0}, {-2.0, 0.0}};
    auto [t2, w2] = split_theta_omega(anti);
    CHECK(max_abs(t2) == 0.0);
    CHECK(w2 == anti);

    auto [t3, w3] = split_theta_omega(SquareMatrix{{1.0, 2.0}, {0.0, 1.0}});
    CHECK(t3 == SquareMatrix{{1.0, 1.0}, {1.0, 1.0}});
    CHECK(w3 == SquareMatrix{{0.0, 1.0}, {-1.0, 0.0}});

    SquareMatrix bad = SquareMatrix::identity(2);
    bad(0, 1) = std::nan("");
    CHECK_THROWS(split_theta_omega(bad));
}

TEST_CASE("split_theta_omega on random input")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const SquareMatrix a = ref::random_matrix(rng, n, -1e3, 1e3);
        const auto [theta, omega] = split_theta_omega(a);
        CHECK(theta == theta.transpose());
        const double eps = std::numeric_limits<double>::epsilon() * max_abs(a);
        CHECK(ref::max_abs_diff(omega, -1.0 * omega.transpose()) <= eps);
        CHECK(ref::max_abs_diff(theta + omega, a) <= eps);
    }
}

TEST_CASE("split_theta_omega is exact when paired entries are within a factor of two")
{
    std::mt19937_64 rng(18);
    std::uniform_real_distribution<double> mag(1.0, 2.0);
    std::bernoulli_distribution neg(0.5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + trial % 5;
        SquareMatrix a(n);
        const double sign = neg(rng) ? -1.0 : 1.0;
        for (auto& v : a.data())
            v = sign * mag(rng) * std::ldexp(1.0, trial % 40 - 20);
        const auto [theta, omega] = split_theta_omega(a);
        CHECK(theta + omega == a);
    }
}

TEST_CASE("psi2 values")
{
    CHECK(psi2(0.0) == 1.0);
    CHECK(std::abs(psi2(1.0) - 1.3130352854993312) <= 2e-16);
    CHECK(std::abs(psi2(20.0) - 20.0) <= 1e-12);
    CHECK(psi2(1e6) == 1e6);
    CHECK(psi2(-1e6) == 1e6);
    CHECK(std::isfinite(psi2(710.0)));
}

TEST_CASE("psi2 is even, at least one, and continuous across the series switch")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-50.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double u = d(rng);
        CHECK(psi2(-u) == psi2(u));
        CHECK(psi2(u) >= 1.0);
    }
    for (double u : {1e-300, 1e-10, 1e-4, 9.99e-4, 1e-3, 1.01e-3, 0.5, 349.9, 350.1})
        CHECK(psi2(u) >= 1.0);

    // the jump at the switch, net of the function's own change over the gap
    const double lo = kPsi2SeriesSwitch * (1.0 - 1e-6);
    const double hi = kPsi2SeriesSwitch * (1.0 + 1e-6);
    auto exact = [](long double u) { return u * std::cosh(u) / std::sinh(u); };
    const double jump = (psi2(hi) - psi2(lo)) - static_cast<double>(exact(hi) - exact(lo));
    CHECK(std::abs(jump) <= 1e-13);

    // across the asymptotic cut-over as well
    CHECK(std::abs(psi2(kPsi2Asymptote * (1.0 + 1e-12)) - psi2(kPsi2Asymptote * (1.0 - 1e-12))) <=
          1e-9);
}

TEST_CASE("psi2 series branch against the closed form")
{
    for (double u : {1e-5, 1e-4, 5e-4, 9e-4}) {
        const double exact = u * std::cosh(u) / std::sinh(u);
        CHECK(std::abs(psi2(u) - exact) <= 4e-16);
    }
}

TEST_CASE("frobenius_norm")
{
    CHECK(frobenius_norm(SquareMatrix(3)) == 0.0);
    CHECK(frobenius_norm(SquareMatrix::identity(4)) == 2.0);
    CHECK(frobenius_norm(SquareMatrix{{3.0, 0.0}, {4.0, 0.0}}) == 5.0);
}
