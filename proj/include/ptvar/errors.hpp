#pragma once

#include <stdexcept>
#include <string>

namespace ptvar {

// Base for every library error so callers can catch one type at the CLI edge.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Gamma argument landed within pole_tolerance of a non-positive integer.
// Carries the offending argument value; hitting one of these is how region
// boundaries announce themselves.
struct PoleError : Error {
    double argument;
    explicit PoleError(double arg, const std::string& where)
        : Error(where + ": Gamma argument " + std::to_string(arg) +
                " is at a pole"),
          argument(arg) {}
};

// The alpha-elimination bracket was non-positive: no admissible alpha exists
// at this (beta, gamma).
struct InfeasibleError : Error {
    using Error::Error;
};

// Requested contour shape exits the decay wedges of the dominant power.
struct WedgeError : Error {
    using Error::Error;
};

// Argument outside an operation's domain (e.g. contour shape b <= 1).
struct DomainError : Error {
    using Error::Error;
};

// Adaptive quadrature failed to converge under node doubling.
struct QuadratureError : Error {
    using Error::Error;
};

// Iterative search exhausted max_iter without meeting its tolerance.
struct NoConvergence : Error {
    using Error::Error;
};

// Stationary search started from a point outside the feasible region.
struct InfeasibleSeed : Error {
    using Error::Error;
};

// Shooting integration lost the solution despite renormalization.
struct OverflowError : Error {
    using Error::Error;
};

// Invalid step configuration for the shooting integrator.
struct StepError : Error {
    using Error::Error;
};

// Mismatch function does not change sign over the supplied bracket.
struct NoRootInBracket : Error {
    using Error::Error;
};

// A hierarchy product was requested beyond what has been built.
struct NotComputed : Error {
    using Error::Error;
};

// Hessian eigenvalue too close to zero to classify the stationary point.
struct DegenerateHessian : Error {
    using Error::Error;
};

}  // namespace ptvar
