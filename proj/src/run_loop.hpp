#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include "lyap/integrate.hpp"
#include "lyap/spectrum.hpp"
#include "lyap/systems.hpp"
#include "lyap/trajectory.hpp"

namespace lyap::detail {

// Trajectory samples at the substep times t0 + m·h, m = 0..kSubsteps, of one
// big step.
struct SubstepPoints {
    double t0 = 0.0;
    double h = 0.0;
    std::array<Vector, kSubsteps + 1> x;

    void fill(TrajectoryTracker& tracker, double start, double substep)
    {
        t0 = start;
        h = substep;
        x[0] = tracker.state();
        for (int m = 1; m <= kSubsteps; ++m)
            x[m] = tracker.advance_to(start + m * substep);
    }

    const Vector& at(double t) const
    {
        const long long m = std::llround((t - t0) / h);
        if (m < 0 || m > kSubsteps || std::abs(t - (t0 + m * h)) > 1e-9 * h)
            throw Error("trajectory requested off the substep grid");
        return x[static_cast<std::size_t>(m)];
    }
};

// Fixed-step driver shared by both spectrum methods. `deriv(t, x, state)`
// gives the tangent of the matrix state; `post` runs after every big step
// (re-symmetrization or renormalization); `exponents` turns the state at time
// t into a descending spectrum.
template <class Deriv, class Post, class Exponents>
RunResult drive(Method method, const SystemSpec& system, const Vector& x0, SquareMatrix m0,
                const RunOptions& opts, Deriv&& deriv, Post&& post, Exponents&& exponents)
{
    opts.validate();
    if (x0.size() != system.dim)
        throw DimensionError("initial point has wrong dimension for system " + system.name);

    const auto started = std::chrono::steady_clock::now();
    const StepperConfig cfg{kSubsteps * opts.h, kSubsteps};
    const long long steps = opts.big_steps();

    RunResult result;
    result.series.method = method;
    if (opts.keep_trajectory) {
        result.trajectory.t.reserve(static_cast<std::size_t>(steps) + 1);
        result.trajectory.x.reserve(static_cast<std::size_t>(steps) + 1);
        result.trajectory.t.push_back(0.0);
        result.trajectory.x.push_back(x0);
    }

    TrajectoryTracker tracker(system, x0);
    SubstepPoints points;
    MatrixState state{std::move(m0), 0.0};
    auto finish = [&] {
        result.trace_integral = state.trace_integral;
        result.final_matrix = state.m;
        result.series.wall = std::chrono::steady_clock::now() - started;
    };

    for (long long k = 1; k <= steps; ++k) {
        const double t0 = static_cast<double>(k - 1) * cfg.big_step;
        const double t = static_cast<double>(k) * cfg.big_step;
        try {
            points.fill(tracker, t0, cfg.substep());
            auto tangent = [&](double ts, const MatrixState& s) {
                return deriv(ts, points.at(ts), s);
            };
            MatrixState next = mmid_step(tangent, t0, state, cfg);
            post(t, next);
            state = std::move(next);
            if (k % opts.record_every == 0 || k == steps)
                result.series.rows.push_back({t, exponents(t, state)});
        } catch (const Error& e) {
            // close the partial series on the last completed step
            const bool recorded = !result.series.rows.empty() && result.series.rows.back().t == t0;
            if (t0 > 0.0 && !recorded) {
                try {
                    result.series.rows.push_back({t0, exponents(t0, state)});
                } catch (const Error&) {
                }
            }
            finish();
            std::ostringstream os;
            os.precision(17);
            os << method_name(method) << " run on " << system.name
               << " failed in step starting at t=" << t0 << ": " << e.what();
            throw IntegrationFailure(os.str(), std::move(result));
        }
        const Vector& x = points.x[kSubsteps];
        if (opts.keep_trajectory) {
            result.trajectory.t.push_back(t);
            result.trajectory.x.push_back(x);
        }
        if (opts.observer)
            opts.observer(t, x, state.m);
    }
    finish();
    return result;
}

} // namespace lyap::detail
