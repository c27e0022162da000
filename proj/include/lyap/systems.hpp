#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lyap/matrix.hpp"

namespace lyap {

/// An ODE system ẋ = f(t, x) with its analytic Jacobian A = ∂f/∂x.
struct SystemSpec {
    using Rhs = std::function<Vector(double, std::span<const double>)>;
    using Jacobian = std::function<SquareMatrix(double, std::span<const double>)>;

    std::string name;
    std::size_t dim = 0;
    Rhs rhs;
    Jacobian jacobian;
    /// Reference spectrum (descending) when one is known in closed form.
    std::optional<std::vector<double>> known_exponents;
    /// Initial point used by the CLI when none is given.
    Vector default_x0;
};

/// Constant 4×4 block system; exponents {1/2+√2, 1, 1, 1/2-√2}.
SystemSpec linear_block_system();

SystemSpec lorenz_system(double sigma = 10.0, double rho = 28.0, double beta = 8.0 / 3.0);

/// Ball between two walls approaching each other:
/// H = p²/2 + U(q/f(t)), U(x) = artanh(x)²/2, f(t) = (t+20)/(2t+20).
SystemSpec walls_system();

/// Harmonic rotation ẋ = ω y, ẏ = -ω x; the Jacobian is antisymmetric.
SystemSpec rotation_system(double omega_rate = 1.0);

namespace walls {

/// Inputs with |x| above this are treated as having crossed the wall.
inline constexpr double kBarrierGuard = 1.0 - 1e-12;

/// Half-distance between the walls, decreasing from 1 to 1/2.
double half_width(double t);
double half_width_rate(double t);

double artanh(double x);
double potential(double x);
double potential_slope(double x);
double potential_curvature(double x);

/// Instantaneous energy p²/2 + U(q/f(t)).
double energy(double t, double q, double p);

} // namespace walls

/// Names accepted by make_system, in listing order.
const std::vector<std::string>& system_names();

/// Registry lookup; throws UnknownSystem for anything not in system_names().
SystemSpec make_system(std::string_view name);

} // namespace lyap
