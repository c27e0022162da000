#include "lyap/systems.hpp"

#include <cmath>
#include <sstream>

#include "lyap/errors.hpp"

namespace lyap {

namespace {

void check_dim(std::span<const double> x, std::size_t n, const char* who)
{
    if (x.size() != n) {
        std::ostringstream os;
        os << who << ": state has " << x.size() << " components, expected " << n;
        throw DimensionError(os.str());
    }
}

} // namespace

SystemSpec linear_block_system()
{
    const SquareMatrix a{
        {1.0, -8.0, 0.0, 0.0},
        {12.0, 1.0, 0.0, 0.0},
        {0.0, 0.0, 0.5, 2.0},
        {0.0, 0.0, 1.0, 0.5},
    };
    SystemSpec s;
    s.name = "linear4";
    s.dim = 4;
    s.rhs = [a](double, std::span<const double> x) {
        check_dim(x, 4, "linear4");
        return a * x;
    };
    s.jacobian = [a](double, std::span<const double> x) {
        check_dim(x, 4, "linear4");
        return a;
    };
    // Real parts of 1 ± 4i√6 and 1/2 ± √2.
    s.known_exponents = std::vector<double>{0.5 + std::sqrt(2.0), 1.0, 1.0, 0.5 - std::sqrt(2.0)};
    // The origin: any other start overflows x near t = 370 (growth e^{1.91 t}).
    s.default_x0 = {0.0, 0.0, 0.0, 0.0};
    return s;
}

SystemSpec lorenz_system(double sigma, double rho, double beta)
{
    if (!std::isfinite(sigma) || !std::isfinite(rho) || !std::isfinite(beta))
        throw DomainError("lorenz_system: non-finite parameter");
    SystemSpec s;
    s.name = "lorenz";
    s.dim = 3;
    s.rhs = [=](double, std::span<const double> v) {
        check_dim(v, 3, "lorenz");
        const double x = v[0], y = v[1], z = v[2];
        return Vector{sigma * (y - x), x * (rho - z) - y, x * y - beta * z};
    };
    s.jacobian = [=](double, std::span<const double> v) {
        check_dim(v, 3, "lorenz");
        const double x = v[0], y = v[1], z = v[2];
        return SquareMatrix{
            {-sigma, sigma, 0.0},
            {rho - z, -1.0, -x},
            {y, x, -beta},
        };
    };
    s.default_x0 = {10.0, 10.0, 10.0};
    return s;
}

namespace walls {

double half_width(double t) { return (t + 20.0) / (2.0 * t + 20.0); }

double half_width_rate(double t)
{
    const double d = 2.0 * t + 20.0;
    return -20.0 / (d * d);
}

double artanh(double x)
{
    if (!(std::abs(x) <= kBarrierGuard)) {
        std::ostringstream os;
        os.precision(17);
        os << "walls: q/f(t) = " << x << " reached the wall (|x| >= 1); step too large?";
        throw DomainError(os.str());
    }
    return 0.5 * std::log((1.0 + x) / (1.0 - x));
}

double potential(double x)
{
    const double a = artanh(x);
    return 0.5 * a * a;
}

double potential_slope(double x) { return artanh(x) / (1.0 - x * x); }

double potential_curvature(double x)
{
    const double g = 1.0 - x * x;
    return (1.0 + 2.0 * x * artanh(x)) / (g * g);
}

double energy(double t, double q, double p)
{
    return 0.5 * p * p + potential(q / half_width(t));
}

} // namespace walls

SystemSpec walls_system()
{
    SystemSpec s;
    s.name = "walls";
    s.dim = 2;
    s.rhs = [](double t, std::span<const double> v) {
        check_dim(v, 2, "walls");
        const double f = walls::half_width(t);
        return Vector{v[1], -walls::potential_slope(v[0] / f) / f};
    };
    s.jacobian = [](double t, std::span<const double> v) {
        check_dim(v, 2, "walls");
        const double f = walls::half_width(t);
        return SquareMatrix{
            {0.0, 1.0},
            {-walls::potential_curvature(v[0] / f) / (f * f), 0.0},
        };
    };
    s.known_exponents = std::vector<double>{0.0, 0.0};
    s.default_x0 = {0.0, 1.0};
    return s;
}

SystemSpec rotation_system(double omega_rate)
{
    if (!std::isfinite(omega_rate))
        throw DomainError("rotation_system: non-finite rate");
    const SquareMatrix a{{0.0, omega_rate}, {-omega_rate, 0.0}};
    SystemSpec s;
    s.name = "rotation";
    s.dim = 2;
    s.rhs = [w = omega_rate](double, std::span<const double> v) {
        check_dim(v, 2, "rotation");
        return Vector{w * v[1], -w * v[0]};
    };
    s.jacobian = [a](double, std::span<const double> v) {
        check_dim(v, 2, "rotation");
        return a;
    };
    s.known_exponents = std::vector<double>{0.0, 0.0};
    s.default_x0 = {1.0, 0.0};
    return s;
}

const std::vector<std::string>& system_names()
{
    static const std::vector<std::string> names{"linear4", "lorenz", "walls", "rotation"};
    return names;
}

SystemSpec make_system(std::string_view name)
{
    if (name == "linear4")
        return linear_block_system();
    if (name == "lorenz")
        return lorenz_system();
    if (name == "walls")
        return walls_system();
    if (name == "rotation")
        return rotation_system();
    std::ostringstream os;
    os << "unknown system '" << name << "'; available:";
    for (const auto& n : system_names())
        os << ' ' << n;
    throw UnknownSystem(os.str());
}

} // namespace lyap
