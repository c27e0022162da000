#pragma once

#include <vector>

#include "lyap/integrate.hpp"
#include "lyap/linalg.hpp"
#include "lyap/spectrum.hpp"
#include "lyap/systems.hpp"

namespace lyap {

/// Joint state of the continuous method. Lambda is the rescaled Lyapunov
/// matrix: L = (t+1)Λ with L = log(F Fᵀ)/2, so Λ(0) = 0.
struct LyapState {
    double t = 0.0;
    Vector x;
    SquareMatrix lambda;
};

/// Λ̇ for given θ (symmetric part of the Jacobian) and ω (antisymmetric part):
///
///   Λ̇ = (ψ₂((t+1) ad_Λ) θ − Λ)/(t+1) − [Λ, ω]
///
/// ψ₂ of the adjoint is applied in the eigenbasis of Λ, where ad_Λ acts on
/// entry (i,j) as multiplication by λ_i − λ_j. The result is symmetrized.
SquareMatrix lambda_derivative(double t, const SquareMatrix& lambda, const SquareMatrix& theta,
                               const SquareMatrix& omega);

struct CoupledTangent {
    Vector x_dot;
    SquareMatrix lambda_dot;
    double trace_theta = 0.0;
};

/// (ẋ, Λ̇, tr θ) at the given state.
CoupledTangent coupled_derivative(const LyapState& state, const SystemSpec& system);

/// Eigenvalues of Λ (descending) scaled by 1 + 1/t.
std::vector<double> instantaneous_exponents(double t, const SquareMatrix& lambda);

/// Integrates Λ from Λ(0) = 0 with modified midpoint (H = 4h, 4 substeps)
/// along the trajectory from x0, re-symmetrizing Λ after each big step.
///
/// Throws IntegrationFailure (holding the partial result) if a step fails.
RunResult run_continuous(const SystemSpec& system, const Vector& x0, const RunOptions& opts);

} // namespace lyap
