#pragma once

#include <stdexcept>
#include <string>

namespace lyap {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class SymmetryError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Evaluation outside the domain of a model (e.g. a trajectory that crossed
/// the infinite wall of the contracting-walls potential).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Non-finite derivative inside a modified-midpoint step.
class StepFailure : public Error {
public:
    StepFailure(const std::string& what, double sub_time)
        : Error(what), sub_time_(sub_time) {}
    double sub_time() const noexcept { return sub_time_; }

private:
    double sub_time_;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class RankCollapse : public Error {
public:
    using Error::Error;
};

class OracleRangeError : public Error {
public:
    using Error::Error;
};

class UnknownSystem : public Error {
public:
    using Error::Error;
};

} // namespace lyap
