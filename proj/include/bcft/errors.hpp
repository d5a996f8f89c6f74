#pragma once

#include <stdexcept>
#include <string>

namespace bcft {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: non-finite input, nonpositive rate, unknown parameter.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Division by a bicomplex number with a vanishing idempotent component.
class ZeroDivisorError : public Error {
public:
    ZeroDivisorError(const std::string& what, bool zero_operand)
        : Error(what), zero_operand_(zero_operand) {}

    /// True when the operand was zero itself rather than a proper zero divisor.
    bool zero_operand() const noexcept { return zero_operand_; }

private:
    bool zero_operand_;
};

/// Frequency outside the open strip region of a signal.
class OutsideRegionError : public Error {
public:
    OutsideRegionError(const std::string& what, int component, double margin)
        : Error(what), component_(component), margin_(margin) {}

    /// Idempotent component (1 or 2) that failed; 0 when not component-specific.
    int component() const noexcept { return component_; }
    double margin() const noexcept { return margin_; }

private:
    int component_;
    double margin_;
};

/// Frequency at a pole of the closed-form transform.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its panel budget above tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double estimate)
        : Error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

}  // namespace bcft
