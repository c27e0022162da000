#include <doctest.h>

#include <cmath>

#include "lyap/continuous.hpp"
#include "lyap/oracles.hpp"
#include "lyap/standard.hpp"
#include "reference.hpp"

using namespace lyap;

TEST_CASE("fundamental_log at t = 0 is zero")
{
    const SystemSpec s = lorenz_system();
    CHECK(max_abs(fundamental_log(s, s.default_x0, 0.0, 1e-3)) == 0.0);
}

TEST_CASE("fundamental_log of a rotation vanishes")
{
    const SystemSpec s = rotation_system();
    for (double t : {0.5, 2.0, 7.0})
        CHECK(max_abs(fundamental_log(s, s.default_x0, t, 1e-3)) <= 1e-9);
}

TEST_CASE("fundamental_log eigenvalues are half the logs of the eigenvalues of FᵀF")
{
    for (const char* name : {"linear4", "lorenz", "walls"}) {
        const SystemSpec s = make_system(name);
        const double t = 1.0;
        const SquareMatrix l = fundamental_log(s, s.default_x0, t, 1e-3);
        // FᵀF is far too ill-conditioned for double, so its eigenvalues come
        // from the characteristic polynomial in the oracle's own precision.
        const OracleMatrix f = fundamental_matrix(s, s.default_x0, t, 1e-3);
        Eigen::VectorXd want(static_cast<Eigen::Index>(s.dim));
        if (s.dim <= 3) {
            const auto ev = ref::charpoly_eigenvalues(f.transpose() * f);
            for (std::size_t i = 0; i < s.dim; ++i)
                want(static_cast<Eigen::Index>(s.dim - 1 - i)) =
                    static_cast<double>(log(ev[i]) / 2);
        } else {
            const Eigen::MatrixXd fd = ref::to_eigen(f.cast<double>());
            want = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(fd.transpose() * fd)
                       .eigenvalues()
                       .array()
                       .log() /
                   2.0;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> got(ref::to_eigen(l));
        INFO(name);
        CHECK((got.eigenvalues() - want).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("constant systems: fundamental_log matches the matrix exponential")
{
    const SystemSpec s = linear_block_system();
    const SquareMatrix a = s.jacobian(0.0, s.default_x0);
    for (double t : {0.5, 1.0}) {
        const SquareMatrix want = ref::constant_system_log(a, t);
        const SquareMatrix got = fundamental_log(s, s.default_x0, t, 5e-6);
        INFO("t = " << t);
        CHECK(ref::frobenius(got - want) <= 1e-8);
    }

    const SquareMatrix b{{0.3, -1.2, 0.4}, {0.8, -0.5, 0.0}, {0.1, 0.9, 0.2}};
    SystemSpec m;
    m.name = "const3";
    m.dim = 3;
    m.rhs = [b](double, std::span<const double> x) { return b * x; };
    m.jacobian = [b](double, std::span<const double>) { return b; };
    CHECK(ref::frobenius(fundamental_log(m, Vector{0, 0, 0}, 2.0, 5e-6) -
                         ref::constant_system_log(b, 2.0)) <= 1e-8);
}

TEST_CASE("fundamental_log refuses to run past the norm cap")
{
    const SystemSpec s = linear_block_system();
    CHECK_THROWS_AS(fundamental_log(s, s.default_x0, 130.0, 0.01), OracleRangeError);
}

TEST_CASE("sum_rule_residual")
{
    RunOptions opts;
    opts.h = 0.01;
    opts.t_end = 20.0;
    const SystemSpec rot = rotation_system();
    const RunResult r = run_continuous(rot, rot.default_x0, opts);
    CHECK(sum_rule_residual(r.series, rot, r.trajectory) <= 1e-10);

    const SystemSpec lor = lorenz_system();
    const RunResult c = run_continuous(lor, lor.default_x0, opts);
    double sum = 0.0;
    for (double e : c.series.final_row().exponents)
        sum += e;
    CHECK(sum_rule_residual(c.series, lor, c.trajectory) ==
          doctest::Approx(std::abs(sum + 41.0 / 3.0)).epsilon(1e-6));

    Trajectory shifted = c.trajectory;
    shifted.t.pop_back();
    shifted.x.pop_back();
    CHECK_THROWS(sum_rule_residual(c.series, lor, shifted));
}

TEST_CASE("tangent exponent estimate for the walls")
{
    const SystemSpec s = walls_system();
    RunOptions opts;
    opts.h = 0.005;
    opts.t_end = 400.0;
    const RunResult r = run_standard(s, s.default_x0, opts);
    const auto est = tangent_exponent_estimate(r.trajectory);
    REQUIRE(est.size() == r.trajectory.size() - 1);
    CHECK(est.front().first > 0.0);

    // definition at one row
    const std::size_t k = 137;
    const double t = r.trajectory.t[k];
    const double f = walls::half_width(t);
    const double q = r.trajectory.x[k][0], p = r.trajectory.x[k][1];
    const double pd = walls::potential_slope(q / f) / f;
    CHECK(est[k - 1].second == doctest::Approx(std::log(p * p + pd * pd) / (2 * t)));

    // decays towards zero
    double late = 0.0;
    for (const auto& [tt, l] : est)
        if (tt > 300.0)
            late = std::max(late, std::abs(l));
    CHECK(late < 0.02);
}

TEST_CASE("walls velocity and acceleration bounds hold")
{
    const SystemSpec s = walls_system();
    RunOptions opts;
    opts.h = 0.005;
    opts.t_end = 400.0;
    const RunResult r = run_standard(s, s.default_x0, opts);
    const WallsBounds b = walls_bounds_check(r.trajectory);
    CHECK(b.velocity.violations == 0);
    CHECK(b.acceleration.violations == 0);
    CHECK(b.velocity.slack == kWallsBoundSlack);
    CHECK(b.velocity.times.size() == b.velocity.observed.size());
    CHECK(b.velocity.bound.size() == b.velocity.observed.size());
    for (double v : b.velocity.bound)
        CHECK(v <= 2.0 * b.v_m0 * (1.0 + kWallsBoundSlack));
    CHECK(b.velocity.times.front() >= 100.0);

    CHECK_THROWS(walls_bounds_check(r.trajectory, 1e4));
}

TEST_CASE("acceleration bound formula")
{
    const double v = 0.4;
    CHECK(walls_acceleration_bound(v, 1.0) == doctest::Approx(v * std::pow(std::cosh(v), 2)));
    // f = 1/2 limit
    CHECK(walls_acceleration_bound(v, 0.5) ==
          doctest::Approx(4.0 * v * std::pow(std::cosh(2.0 * v), 2)));
}
