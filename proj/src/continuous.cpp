#include "lyap/continuous.hpp"

#include <cmath>
#include <sstream>

#include "run_loop.hpp"

namespace lyap {

SquareMatrix lambda_derivative(double t, const SquareMatrix& lambda, const SquareMatrix& theta,
                               const SquareMatrix& omega)
{
    const std::size_t n = lambda.size();
    if (theta.size() != n || omega.size() != n)
        throw DimensionError("lambda_derivative: dimension mismatch");

    const SymEigen eig = sym_eigh(lambda);
    const SquareMatrix& q = eig.basis;
    const SquareMatrix qt = q.transpose();
    SquareMatrix beta = qt * theta * q;

    const double scale = t + 1.0;
    double widest = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue; // ψ₂(0) = 1
            const double u = scale * (eig.values[i] - eig.values[j]);
            widest = std::max(widest, std::abs(u));
            beta(i, j) *= psi2(u);
            finite = finite && std::isfinite(beta(i, j));
        }
    if (!finite) {
        std::ostringstream os;
        os << "lambda_derivative: non-finite psi2 term, largest (t+1)*gap = " << widest;
        throw OverflowError(os.str());
    }

    SquareMatrix d = q * beta * qt;
    d -= lambda;
    d *= 1.0 / scale;
    d -= commutator(lambda, omega);
    return d.symmetrized();
}

namespace {

MatrixState lambda_tangent(double t, std::span<const double> x, const SquareMatrix& lambda,
                           const SystemSpec& system)
{
    const ThetaOmega parts = split_theta_omega(system.jacobian(t, x));
    return {lambda_derivative(t, lambda, parts.theta, parts.omega), parts.theta.trace()};
}

} // namespace

CoupledTangent coupled_derivative(const LyapState& state, const SystemSpec& system)
{
    const std::span<const double> x(state.x);
    MatrixState d = lambda_tangent(state.t, x, state.lambda, system);
    return {system.rhs(state.t, x), std::move(d.m), d.trace_integral};
}

std::vector<double> instantaneous_exponents(double t, const SquareMatrix& lambda)
{
    if (!(t > 0.0))
        throw Error("instantaneous_exponents: t must be positive");
    std::vector<double> values = sym_eigh(lambda).values;
    const double factor = 1.0 + 1.0 / t;
    for (auto& v : values)
        v *= factor;
    return values;
}

RunResult run_continuous(const SystemSpec& system, const Vector& x0, const RunOptions& opts)
{
    auto deriv = [&](double t, const Vector& x, const MatrixState& s) {
        return lambda_tangent(t, x, s.m, system);
    };
    auto post = [](double, MatrixState& s) { s.m = s.m.symmetrized(); };
    auto exponents = [](double t, const MatrixState& s) {
        return instantaneous_exponents(t, s.m);
    };
    return detail::drive(Method::continuous, system, x0, SquareMatrix(system.dim), opts, deriv,
                         post, exponents);
}

} // namespace lyap
