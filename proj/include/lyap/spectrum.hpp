#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lyap/errors.hpp"
#include "lyap/matrix.hpp"

namespace lyap {

enum class Method { continuous, standard };

std::string_view method_name(Method m);

struct SpectrumRow {
    double t = 0.0;
    std::vector<double> exponents; // descending
};

/// Time series of exponent estimates emitted by one method.
struct SpectrumSeries {
    Method method = Method::continuous;
    std::vector<SpectrumRow> rows;
    std::chrono::duration<double> wall{0.0};

    const SpectrumRow& final_row() const;
};

/// Trajectory samples at every big step, starting at t = 0.
struct Trajectory {
    std::vector<double> t;
    std::vector<Vector> x;

    std::size_t size() const noexcept { return t.size(); }
};

struct RunOptions {
    /// Substep; the big step is 4h.
    double h = 0.01;
    double t_end = 1000.0;
    /// Record exponents every this many big steps (and always at the end).
    int record_every = 25;
    bool keep_trajectory = true;
    /// Called after every big step with (t, x, Λ) for the continuous method or
    /// (t, x, Z) for the standard one.
    std::function<void(double, const Vector&, const SquareMatrix&)> observer;

    void validate() const;
    long long big_steps() const;
};

inline constexpr int kSubsteps = 4;

struct RunResult {
    SpectrumSeries series;
    Trajectory trajectory;
    /// ∫ tr θ dt accumulated by the stepper alongside the run.
    double trace_integral = 0.0;
    /// Λ (continuous) or Z (standard) at the last completed step.
    SquareMatrix final_matrix;
};

/// A run that stopped early; carries everything recorded up to the failure.
class IntegrationFailure : public Error {
public:
    IntegrationFailure(const std::string& what, RunResult partial)
        : Error(what), partial_(std::move(partial)) {}
    const RunResult& partial() const noexcept { return partial_; }

private:
    RunResult partial_;
};

} // namespace lyap
