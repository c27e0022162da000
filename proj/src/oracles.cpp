#include "lyap/oracles.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "lyap/integrate.hpp"
#include "lyap/trajectory.hpp"
#include "run_loop.hpp"

namespace lyap {

namespace {

using OracleState = BasicMatrixState<OracleReal>;

const OracleReal kOracleEigenTol("1e-80");

} // namespace

OracleMatrix fundamental_matrix(const SystemSpec& system, const Vector& x0, double t_end,
                                double h)
{
    if (x0.size() != system.dim)
        throw DimensionError("fundamental_matrix: initial point has wrong dimension");
    if (!(t_end >= 0.0) || !(h > 0.0))
        throw Error("fundamental_matrix: need t_end >= 0 and h > 0");

    const StepperConfig cfg{kSubsteps * h, kSubsteps};
    const long long steps = std::llround(t_end / cfg.big_step);
    if (t_end > 0.0 && steps < 1)
        throw Error("fundamental_matrix: t_end shorter than one big step");

    TrajectoryTracker tracker(system, x0);
    detail::SubstepPoints points;
    OracleState state{OracleMatrix::identity(system.dim), 0.0};
    for (long long k = 1; k <= steps; ++k) {
        const double t0 = static_cast<double>(k - 1) * cfg.big_step;
        points.fill(tracker, t0, cfg.substep());
        auto deriv = [&](double t, const OracleState& s) {
            const SquareMatrix a = system.jacobian(t, points.at(t));
            return OracleState{a.cast<OracleReal>() * s.m, 0.0};
        };
        state = mmid_step(deriv, t0, state, cfg);
        if (max_abs(state.m) >= OracleReal(kOracleNormCap)) {
            std::ostringstream os;
            os << "fundamental_matrix: |F| exceeded " << kOracleNormCap << " at t="
               << static_cast<double>(k) * cfg.big_step << "; oracle is short-time only";
            throw OracleRangeError(os.str());
        }
    }
    return state.m;
}

SquareMatrix fundamental_log(const SystemSpec& system, const Vector& x0, double t_end, double h)
{
    if (t_end == 0.0)
        return SquareMatrix(system.dim);
    const OracleMatrix f = fundamental_matrix(system, x0, t_end, h);
    const OracleMatrix m = f * f.transpose();
    const BasicSymEigen<OracleReal> eig = sym_eigh(m, kOracleEigenTol);

    const std::size_t n = system.dim;
    std::vector<OracleReal> logs(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(eig.values[i] > 0))
            throw OracleRangeError("fundamental_log: F Fᵀ lost positive definiteness");
        logs[i] = log(eig.values[i]) / 2;
    }
    return reconstruct(BasicSymEigen<OracleReal>{logs, eig.basis}).cast<double>();
}

double sum_rule_residual(const SpectrumSeries& series, const SystemSpec& system,
                         const Trajectory& trajectory)
{
    const SpectrumRow& last = series.final_row();
    if (trajectory.size() < 2 || trajectory.t.size() != trajectory.x.size())
        throw Error("sum_rule_residual: trajectory needs at least two samples");
    const double t_final = trajectory.t.back();
    if (trajectory.t.front() != 0.0 ||
        std::abs(t_final - last.t) > 1e-9 * std::max(1.0, t_final))
        throw Error("sum_rule_residual: series and trajectory are not aligned in time");

    auto trace_theta = [&](std::size_t k) {
        return system.jacobian(trajectory.t[k], trajectory.x[k]).trace();
    };
    double integral = 0.0;
    double prev = trace_theta(0);
    for (std::size_t k = 1; k < trajectory.size(); ++k) {
        const double cur = trace_theta(k);
        integral += 0.5 * (trajectory.t[k] - trajectory.t[k - 1]) * (prev + cur);
        prev = cur;
    }
    const double sum = std::accumulate(last.exponents.begin(), last.exponents.end(), 0.0);
    return std::abs(sum - integral / t_final);
}

std::vector<std::pair<double, double>> tangent_exponent_estimate(const Trajectory& trajectory)
{
    std::vector<std::pair<double, double>> out;
    out.reserve(trajectory.size());
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
        const double t = trajectory.t[k];
        if (!(t > 0.0))
            continue;
        const Vector& x = trajectory.x[k];
        if (x.size() != 2)
            throw DimensionError("tangent_exponent_estimate: expects (q, p) samples");
        const double f = walls::half_width(t);
        const double qdot = x[1];
        const double pdot = -walls::potential_slope(x[0] / f) / f;
        out.emplace_back(t, std::log(qdot * qdot + pdot * pdot) / (2.0 * t));
    }
    return out;
}

double walls_acceleration_bound(double v_m0, double f)
{
    const double c = std::cosh(v_m0 / f);
    return v_m0 / (f * f) * c * c;
}

WallsBounds walls_bounds_check(const Trajectory& trajectory, double t_ref, double slack)
{
    std::size_t first = 0;
    while (first < trajectory.size() && trajectory.t[first] < t_ref)
        ++first;
    if (first + 1 >= trajectory.size())
        throw Error("walls_bounds_check: trajectory too short for t_ref");

    const Vector& at_ref = trajectory.x[first];
    const double t0 = trajectory.t[first];
    WallsBounds out;
    // v_M f is non-increasing past t_ref, so v_M0 = v_M(t_ref) f(t_ref).
    out.v_m0 = std::sqrt(2.0 * walls::energy(t0, at_ref[0], at_ref[1])) * walls::half_width(t0);
    out.velocity.slack = slack;
    out.acceleration.slack = slack;

    for (std::size_t k = first; k < trajectory.size(); ++k) {
        const double t = trajectory.t[k];
        const double f = walls::half_width(t);
        const double q = trajectory.x[k][0];
        const double p = trajectory.x[k][1];

        const double v_obs = std::abs(p);
        const double v_bound = out.v_m0 / f;
        out.velocity.times.push_back(t);
        out.velocity.observed.push_back(v_obs);
        out.velocity.bound.push_back(v_bound);
        if (v_obs > v_bound * (1.0 + slack))
            ++out.velocity.violations;

        const double a_obs = std::abs(walls::potential_slope(q / f) / f);
        const double a_bound = walls_acceleration_bound(out.v_m0, f);
        out.acceleration.times.push_back(t);
        out.acceleration.observed.push_back(a_obs);
        out.acceleration.bound.push_back(a_bound);
        if (a_obs > a_bound * (1.0 + slack))
            ++out.acceleration.violations;
    }
    return out;
}

} // namespace lyap
