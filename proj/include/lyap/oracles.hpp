#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lyap/linalg.hpp"
#include "lyap/spectrum.hpp"
#include "lyap/systems.hpp"

namespace lyap {

/// Scalar for the fundamental-matrix oracle. F Fᵀ for Lorenz at t = 3 has a
/// condition number around 1e43, so double cannot resolve its small end.
using OracleReal = boost::multiprecision::cpp_bin_float_100;
using OracleMatrix = BasicMatrix<OracleReal>;

/// Oracle refuses to continue once max |F_ij| reaches this.
inline constexpr double kOracleNormCap = 1e100;

/// F(t_end) for Ḟ = A(t, x(t)) F, F(0) = I, integrated alongside the trajectory
/// with the same modified-midpoint steps (H = 4h) the spectrum methods use.
OracleMatrix fundamental_matrix(const SystemSpec& system, const Vector& x0, double t_end,
                                double h);

/// L = log(F Fᵀ)/2 at t_end, evaluated spectrally in extended precision.
/// Zero at t_end = 0.
SquareMatrix fundamental_log(const SystemSpec& system, const Vector& x0, double t_end, double h);

/// |Σλ_i(t_f) − (1/t_f)∫₀^{t_f} tr θ dt|, the integral taken by the trapezoid
/// rule over the recorded trajectory.
double sum_rule_residual(const SpectrumSeries& series, const SystemSpec& system,
                         const Trajectory& trajectory);

/// λ(t) = ln(q̇² + ṗ²)/(2t) along a contracting-walls trajectory, i.e. the
/// growth of the flow's own tangent vector. Rows with t = 0 are skipped.
std::vector<std::pair<double, double>> tangent_exponent_estimate(const Trajectory& trajectory);

struct BoundReport {
    std::vector<double> times;
    std::vector<double> observed;
    std::vector<double> bound;
    double slack = 0.0;
    std::size_t violations = 0;
};

struct WallsBounds {
    /// v_M0, the constant in v_M ≤ v_M0/f.
    double v_m0 = 0.0;
    BoundReport velocity;     // |p| against v_M0/f
    BoundReport acceleration; // |ṗ| against (v_M0/f²)·cosh²(v_M0/f)
};

inline constexpr double kWallsBoundSlack = 0.05;

/// Velocity and acceleration bounds for t ≥ t_ref along a walls trajectory.
WallsBounds walls_bounds_check(const Trajectory& trajectory, double t_ref = 100.0,
                               double slack = kWallsBoundSlack);

/// Acceleration bound a_M for a given v_M0 and wall half-width f.
double walls_acceleration_bound(double v_m0, double f);

} // namespace lyap
