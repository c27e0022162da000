#pragma once

#include "lyap/matrix.hpp"
#include "lyap/systems.hpp"

namespace lyap {

inline constexpr double kTrajectoryTol = 1e-12;

/// Advances the particular solution x(t) of a system with an adaptive
/// Dormand–Prince stepper, landing exactly on each requested time. The
/// spectrum methods query it at every modified-midpoint substep time.
class TrajectoryTracker {
public:
    TrajectoryTracker(const SystemSpec& system, Vector x0, double t0 = 0.0,
                      double tol = kTrajectoryTol);

    /// Integrates forward to t (t >= time()) and returns x(t).
    const Vector& advance_to(double t);

    double time() const noexcept { return t_; }
    const Vector& state() const noexcept { return x_; }

private:
    const SystemSpec* system_;
    Vector x_;
    double t_;
    double tol_;
    double dt_;
};

} // namespace lyap
