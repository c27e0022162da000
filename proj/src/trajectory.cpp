#include "lyap/trajectory.hpp"

#include <cmath>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "lyap/errors.hpp"

namespace lyap {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr int kMaxRejections = 200;

} // namespace

TrajectoryTracker::TrajectoryTracker(const SystemSpec& system, Vector x0, double t0, double tol)
    : system_(&system), x_(std::move(x0)), t_(t0), tol_(tol), dt_(1e-3)
{
    if (x_.size() != system.dim)
        throw DimensionError("trajectory: initial point has wrong dimension for " + system.name);
    if (!all_finite(std::span<const double>(x_)))
        throw DomainError("trajectory: initial point is not finite");
}

const Vector& TrajectoryTracker::advance_to(double target)
{
    if (target < t_)
        throw Error("trajectory: cannot step backwards");

    auto rhs = [this](const Vector& x, Vector& dxdt, double t) { dxdt = system_->rhs(t, x); };
    auto stepper = odeint::make_controlled(tol_, tol_, odeint::runge_kutta_dopri5<Vector>());

    int rejections = 0;
    while (t_ < target) {
        const double remaining = target - t_;
        const bool last = dt_ >= remaining;
        double dt = last ? remaining : dt_;
        const double t_before = t_;
        odeint::controlled_step_result res;
        try {
            res = stepper.try_step(rhs, x_, t_, dt);
        } catch (const DomainError&) {
            // a trial stage left the model's domain; shrink and retry
            t_ = t_before;
            dt *= 0.25;
            res = odeint::fail;
        }
        if (res == odeint::fail) {
            if (++rejections > kMaxRejections) {
                std::ostringstream os;
                os.precision(17);
                os << "trajectory: step size collapsed near t=" << t_ << " on " << system_->name;
                throw StepFailure(os.str(), t_);
            }
            dt_ = dt;
            continue;
        }
        rejections = 0;
        if (!last || dt > dt_)
            dt_ = dt;
        if (last)
            t_ = target; // exact landing
        if (!all_finite(std::span<const double>(x_))) {
            std::ostringstream os;
            os.precision(17);
            os << "trajectory: non-finite state at t=" << t_;
            throw StepFailure(os.str(), t_);
        }
    }
    return x_;
}

} // namespace lyap
