#pragma once

// Core value types: the model, the variational parameter triple, power-sum
// potentials, wedge geometry, and the feasibility-region classifier.

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "ptvar/errors.hpp"
#include "ptvar/specfun.hpp"

namespace ptvar {

// The Hamiltonian exponent N in p^2 - (ix)^N. Real so the family can be
// followed continuously in N.
struct ModelSpec {
    double n_power;

    explicit ModelSpec(double n) : n_power(n) {
        if (n < 2.0) throw DomainError("ModelSpec: n_power must be >= 2");
    }
};

// Trial-state parameters (alpha, beta, gamma) with the bijection to the
// wave-function form (ix)^c exp(a (ix)^b):
//   alpha = 2a, beta = 1/b, gamma = 2c/b.
struct VariationalParams {
    double alpha;
    double beta;
    double gamma_;

    VariationalParams(double al, double be, double ga)
        : alpha(al), beta(be), gamma_(ga) {
        if (!(alpha > 0.0)) throw DomainError("VariationalParams: alpha must be > 0");
        if (!(beta > 0.0)) throw DomainError("VariationalParams: beta must be > 0");
    }

    double a() const { return alpha / 2.0; }
    double b() const { return 1.0 / beta; }
    double c() const { return gamma_ / (2.0 * beta); }

    static VariationalParams from_abc(double a, double b, double c) {
        return {2.0 * a, 1.0 / b, 2.0 * c / b};
    }
};

// V(x) = sum_j kappa_j (ix)^{p_j}; coefficients real (PT symmetry), terms
// kept sorted by power and merged on construction.
struct PowerSumPotential {
    struct Term {
        double coeff;
        double power;
    };
    std::vector<Term> terms;

    PowerSumPotential() = default;

    explicit PowerSumPotential(std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const Term& s, const Term& t) { return s.power < t.power; });
        for (const Term& t : raw) {
            if (!terms.empty() && std::abs(terms.back().power - t.power) < 1e-10) {
                terms.back().coeff += t.coeff;
            } else {
                terms.push_back(t);
            }
        }
        std::erase_if(terms, [](const Term& t) { return std::abs(t.coeff) < 1e-14; });
    }

    static PowerSumPotential single_power(double n) {
        return PowerSumPotential({{-1.0, n}});
    }

    double dominant_power() const {
        if (terms.empty()) throw DomainError("PowerSumPotential: no terms");
        return terms.back().power;
    }
};

// Centers of the decay wedges for the base model, mirror-symmetric through
// the negative imaginary axis.
struct WedgeGeometry {
    double theta_left;
    double theta_right;
    double opening;
};

inline WedgeGeometry wedge_geometry(const ModelSpec& m) {
    const double N = m.n_power;
    const double tr = -(N - 2.0) / (N + 2.0) * M_PI / 2.0;
    return {-M_PI - tr, tr, 2.0 * M_PI / (N + 2.0)};
}

enum class RegionStatus { Feasible, Infeasible, Boundary };

enum class BoundaryKind { Parabola, DownLine, UpLine, BetaBound };

struct RegionClass {
    RegionStatus status;
    std::optional<BoundaryKind> boundary_kind;
    int line_index = 0;  // k for DownLine/UpLine
};

// Seed parameters from the leading WKB form of the ground state.
inline VariationalParams wkb_params(const ModelSpec& m) {
    const double N = m.n_power;
    return {4.0 / (N + 2.0), 2.0 / (N + 2.0), -N / (N + 2.0)};
}

// The admissible beta interval from requiring the contour rays of b = 1/beta
// to stay inside the decay wedges of the dominant power.
inline std::pair<double, double> beta_bounds(const ModelSpec& m) {
    return {1.0 / (m.n_power + 2.0), 3.0 / (m.n_power + 2.0)};
}

inline bool wedge_check(double dominant_power, double b) {
    return (dominant_power + 2.0) / 3.0 <= b && b <= dominant_power + 2.0;
}

// Contour ray angles for shape parameter b; the rays must avoid the branch
// cut on the positive imaginary axis, hence b > 1.
inline std::pair<double, double> contour_angles(double b) {
    if (b <= 1.0) throw DomainError("contour_angles: b must be > 1");
    return {-M_PI / 2.0 - M_PI / b, -M_PI / 2.0 + M_PI / b};
}

// Feasibility of (beta, gamma): the alpha-elimination bracket
//   2 N beta^2 Gamma(1+beta-gamma) / [(beta^2-beta+gamma) Gamma(1-beta-N beta-gamma)]
// must be positive. Boundary when any factor sits at a zero/pole within
// pole_tolerance:
//   beta^2 - beta + gamma = 0                 (parabola gamma = beta - beta^2)
//   1 - beta - N beta - gamma = 1 - k          (lines gamma = k - beta(N+1))
//   1 + beta - gamma = 1 - k                   (lines gamma = k + beta)
inline RegionClass classify_region(const ModelSpec& m, double beta, double gamma_) {
    const auto [blo, bhi] = beta_bounds(m);
    if (beta < blo - specfun::pole_tolerance || beta > bhi + specfun::pole_tolerance)
        return {RegionStatus::Infeasible, BoundaryKind::BetaBound, 0};
    if (std::abs(beta - blo) < specfun::pole_tolerance ||
        std::abs(beta - bhi) < specfun::pole_tolerance)
        return {RegionStatus::Boundary, BoundaryKind::BetaBound, 0};

    const double N = m.n_power;
    const double parab = beta * beta - beta + gamma_;
    if (std::abs(parab) < specfun::pole_tolerance)
        return {RegionStatus::Boundary, BoundaryKind::Parabola, 0};

    const double arg_down = 1.0 - beta - N * beta - gamma_;
    if (specfun::is_pole(arg_down)) {
        const int k = 1 - static_cast<int>(std::round(arg_down));
        return {RegionStatus::Boundary, BoundaryKind::DownLine, k};
    }
    const double arg_up = 1.0 + beta - gamma_;
    if (specfun::is_pole(arg_up)) {
        const int k = 1 - static_cast<int>(std::round(arg_up));
        return {RegionStatus::Boundary, BoundaryKind::UpLine, k};
    }

    const double numer = 2.0 * N * beta * beta * specfun::gamma(arg_up);
    const double denom = parab * specfun::gamma(arg_down);
    if (numer / denom > 0.0) return {RegionStatus::Feasible, std::nullopt, 0};
    return {RegionStatus::Infeasible, std::nullopt, 0};
}

// Sampled boundary curves for plotting: the parabola plus the two line
// families for k = 1..k_max, each sampled across beta_bounds.
struct BoundaryCurve {
    BoundaryKind kind;
    int line_index;
    std::vector<std::pair<double, double>> samples;  // (beta, gamma)
};

inline std::vector<BoundaryCurve> region_boundary_curves(const ModelSpec& m,
                                                         int k_max,
                                                         int n_samples) {
    if (k_max < 1) throw DomainError("region_boundary_curves: k_max must be >= 1");
    if (n_samples < 2) throw DomainError("region_boundary_curves: n_samples must be >= 2");
    const auto [blo, bhi] = beta_bounds(m);
    const double N = m.n_power;
    auto sample = [&](auto f) {
        std::vector<std::pair<double, double>> out;
        out.reserve(static_cast<std::size_t>(n_samples));
        for (int i = 0; i < n_samples; ++i) {
            const double be = blo + (bhi - blo) * i / (n_samples - 1.0);
            out.emplace_back(be, f(be));
        }
        return out;
    };
    std::vector<BoundaryCurve> curves;
    curves.push_back({BoundaryKind::Parabola, 0,
                      sample([](double be) { return be - be * be; })});
    for (int k = 1; k <= k_max; ++k) {
        curves.push_back({BoundaryKind::DownLine, k,
                          sample([&, k](double be) { return k - be * (N + 1.0); })});
        curves.push_back({BoundaryKind::UpLine, k,
                          sample([k](double be) { return k + be; })});
    }
    return curves;
}

// The optimizer's search region is identified operationally: the connected
// feasible set containing the WKB point nudged inward by +0.02 in gamma
// (the WKB point itself sits exactly on a boundary line).
inline std::pair<double, double> special_region_seed(const ModelSpec& m) {
    const VariationalParams w = wkb_params(m);
    return {w.beta, w.gamma_ + 0.02};
}

}  // namespace ptvar
