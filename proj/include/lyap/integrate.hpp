#pragma once

#include <concepts>
#include <sstream>

#include "lyap/errors.hpp"
#include "lyap/matrix.hpp"

namespace lyap {

/// Fixed big step H split into an even number of modified-midpoint substeps.
struct StepperConfig {
    double big_step = 0.04;
    int substeps = 4;

    double substep() const { return big_step / substeps; }

    void validate() const
    {
        if (!(big_step > 0.0) || !std::isfinite(big_step))
            throw Error("StepperConfig: big step must be positive and finite");
        if (substeps < 2 || substeps % 2 != 0)
            throw Error("StepperConfig: substeps must be even and >= 2");
    }
};

/// Anything the stepper can advance: closed under addition and real scaling,
/// with a finiteness probe found by unqualified lookup.
template <class S>
concept StepState = std::copy_constructible<S> && requires(const S& a, double s) {
    { a + a } -> std::convertible_to<S>;
    { s * a } -> std::convertible_to<S>;
    { all_finite(a) } -> std::convertible_to<bool>;
};

/// One modified-midpoint step of size cfg.big_step from (t, y).
///
///   z0 = y,  z1 = z0 + h f(t, z0)
///   z_{m+1} = z_{m-1} + 2h f(t + m h, z_m),   m = 1 .. n-1
///   y(t+H) ≈ (z_n + z_{n-1} + h f(t+H, z_n)) / 2
///
/// Throws StepFailure if any derivative evaluation is non-finite.
template <StepState S, class Deriv>
S mmid_step(Deriv&& deriv, double t, const S& y, const StepperConfig& cfg)
{
    cfg.validate();
    const int n = cfg.substeps;
    const double h = cfg.substep();

    auto eval = [&](double ts, const S& z) -> S {
        S d = deriv(ts, z);
        if (!all_finite(d)) {
            std::ostringstream os;
            os.precision(17);
            os << "mmid_step: non-finite derivative at sub-time " << ts;
            throw StepFailure(os.str(), ts);
        }
        return d;
    };

    S prev = y;
    S cur = prev + h * eval(t, prev);
    for (int m = 1; m < n; ++m) {
        S next = prev + (2.0 * h) * eval(t + m * h, cur);
        prev = std::move(cur);
        cur = std::move(next);
    }
    const double t_end = t + cfg.big_step;
    return 0.5 * (cur + prev + h * eval(t_end, cur));
}

/// Matrix integrated by the spectrum methods (Λ or Z) together with the
/// running integral of tr θ.
template <class T>
struct BasicMatrixState {
    BasicMatrix<T> m;
    double trace_integral = 0.0;

    friend BasicMatrixState operator+(const BasicMatrixState& a, const BasicMatrixState& b)
    {
        return {a.m + b.m, a.trace_integral + b.trace_integral};
    }

    friend BasicMatrixState operator*(double s, const BasicMatrixState& a)
    {
        return {T(s) * a.m, s * a.trace_integral};
    }

    friend bool all_finite(const BasicMatrixState& a)
    {
        using std::isfinite;
        if (!std::isfinite(a.trace_integral))
            return false;
        for (const auto& v : a.m.data())
            if (!isfinite(v))
                return false;
        return true;
    }
};

using MatrixState = BasicMatrixState<double>;

} // namespace lyap
