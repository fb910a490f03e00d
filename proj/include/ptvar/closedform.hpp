#pragma once

// Closed-form matrix elements of the trial state: moments of (ix), the
// kinetic expectation, the energy functional, and the alpha that makes the
// base energy stationary at fixed (beta, gamma).

#include <cmath>

#include "ptvar/domain.hpp"
#include "ptvar/errors.hpp"
#include "ptvar/specfun.hpp"

namespace ptvar {

// <(ix)^P> = alpha^{-P beta} Gamma(1-beta-gamma) / Gamma(1-beta-P beta-gamma).
// Normalized by <1>, so moment(p, 0) == 1.
inline double moment(const VariationalParams& p, double power) {
    const double x = 1.0 - p.beta - p.gamma_;
    const double y = 1.0 - p.beta - power * p.beta - p.gamma_;
    return std::pow(p.alpha, -power * p.beta) * specfun::gamma_ratio(x, y);
}

// <p^2> = (beta - beta^2 - gamma) Gamma(1-beta-gamma) alpha^{2 beta}
//         / (4 beta^2 Gamma(1+beta-gamma)).
inline double kinetic(const VariationalParams& p) {
    const double x = 1.0 - p.beta - p.gamma_;
    const double y = 1.0 + p.beta - p.gamma_;
    const double pref = (p.beta - p.beta * p.beta - p.gamma_) /
                        (4.0 * p.beta * p.beta) * std::pow(p.alpha, 2.0 * p.beta);
    return pref * specfun::gamma_ratio(x, y);
}

// E(alpha, beta, gamma) = <p^2> - <(ix)^N> for the base model p^2 - (ix)^N.
inline double energy_functional(const ModelSpec& m, const VariationalParams& p) {
    return kinetic(p) - moment(p, m.n_power);
}

// E = <p^2> + sum_j kappa_j <(ix)^{p_j}> for a general power-sum potential.
// The contour shape must sit inside the decay wedges of the dominant power.
// Constant terms contribute directly (<1> = 1 by normalization).
inline double generalized_energy(const PowerSumPotential& v, const VariationalParams& p) {
    if (!wedge_check(v.dominant_power(), p.b()))
        throw WedgeError("generalized_energy: contour shape outside decay wedges");
    double e = kinetic(p);
    for (const auto& t : v.terms)
        e += std::abs(t.power) < 1e-12 ? t.coeff : t.coeff * moment(p, t.power);
    return e;
}

// The unique alpha > 0 with dE/dalpha = 0 at fixed (beta, gamma):
//   alpha = [ 2 N beta^2 Gamma(1+beta-gamma)
//             / ((beta^2-beta+gamma) Gamma(1-beta-N beta-gamma)) ]^{1/((2+N) beta)}.
// The bracket must be positive; otherwise the point is infeasible.
inline double solve_alpha(const ModelSpec& m, double beta, double gamma_) {
    const double N = m.n_power;
    const double parab = beta * beta - beta + gamma_;
    const double numer = 2.0 * N * beta * beta * specfun::gamma(1.0 + beta - gamma_);
    const double denom = parab * specfun::gamma(1.0 - beta - N * beta - gamma_);
    const double bracket = numer / denom;
    if (!(bracket > 0.0))
        throw InfeasibleError("solve_alpha: stationarity bracket is not positive");
    return std::pow(bracket, 1.0 / ((2.0 + N) * beta));
}

// E(beta, gamma) with alpha eliminated through its stationarity condition.
inline double reduced_energy(const ModelSpec& m, double beta, double gamma_) {
    const double al = solve_alpha(m, beta, gamma_);
    return energy_functional(m, {al, beta, gamma_});
}

}  // namespace ptvar
