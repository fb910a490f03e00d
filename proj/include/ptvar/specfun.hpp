#pragma once

// Real-argument Gamma with explicit pole handling and log-space ratios.
// Negative arguments go through the reflection formula so the sign is exact
// on every interval (-k-1, -k).

#include <cmath>
#include <cstdint>

#include "ptvar/errors.hpp"

namespace ptvar::specfun {

// Absolute distance to the nearest non-positive integer below which an
// argument counts as a pole. Shared by the region classifier so boundary
// detection is deterministic.
inline constexpr double pole_tolerance = 1e-9;

inline bool is_pole(double x) {
    if (x > 0.5) return false;
    const double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) < pole_tolerance;
}

// sin(pi*x) with the argument reduced first; plain std::sin(pi*x) loses
// relative accuracy near integer x, which the reflection formula cannot
// tolerate.
inline double sin_pi(double x) {
    const double r = std::round(x);
    const double d = x - r;  // |d| <= 0.5
    const double s = std::sin(M_PI * d);
    return (static_cast<std::int64_t>(r) % 2 == 0) ? s : -s;
}

namespace detail {

// Lanczos approximation, g = 7, valid for x >= 0.5.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_coeff[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

inline double lanczos_sum(double x) {
    double s = lanczos_coeff[0];
    for (int k = 1; k < 9; ++k) s += lanczos_coeff[k] / (x + k - 1.0);
    return s;
}

inline double gamma_positive(double x) {
    // x >= 0.5
    const double t = x + lanczos_g - 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, x - 0.5) * std::exp(-t) *
           lanczos_sum(x);
}

inline double log_gamma_positive(double x) {
    const double t = x + lanczos_g - 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (x - 0.5) * std::log(t) - t +
           std::log(lanczos_sum(x));
}

}  // namespace detail

// Gamma(x) for real x off the poles.
inline double gamma(double x) {
    if (is_pole(x)) throw PoleError(x, "gamma");
    if (x >= 0.5) return detail::gamma_positive(x);
    // Reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1-x)).
    return M_PI / (sin_pi(x) * detail::gamma_positive(1.0 - x));
}

// log|Gamma(x)| and the sign of Gamma(x), stable for large |x|.
inline void log_abs_gamma(double x, double& log_abs, double& sign) {
    if (x >= 0.5) {
        log_abs = detail::log_gamma_positive(x);
        sign = 1.0;
        return;
    }
    const double s = sin_pi(x);
    log_abs = std::log(M_PI) - std::log(std::abs(s)) -
              detail::log_gamma_positive(1.0 - x);
    sign = (s > 0.0) ? 1.0 : -1.0;
}

// Gamma(x)/Gamma(y) in log space with sign tracking. When y is a pole the
// ratio is exactly zero (1/Gamma has a zero there). x at a pole is an error.
inline double gamma_ratio(double x, double y) {
    if (is_pole(x)) throw PoleError(x, "gamma_ratio");
    if (is_pole(y)) return 0.0;
    double lx, sx, ly, sy;
    log_abs_gamma(x, lx, sx);
    log_abs_gamma(y, ly, sy);
    return sx * sy * std::exp(lx - ly);
}

}  // namespace ptvar::specfun
