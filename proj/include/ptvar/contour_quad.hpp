#pragma once

// Gauss-Legendre quadrature along the two-ray contour with a circular arc
// detour below the origin. Independent numerical oracle for the closed-form
// Gamma expressions and the engine behind signed norms.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ptvar/domain.hpp"
#include "ptvar/errors.hpp"

namespace ptvar {

using Complex = std::complex<double>;

// (ix)^p on the principal branch, cut along the positive imaginary x axis,
// i.e. exp(p log(ix)) with arg(ix) in (-pi, pi).
inline Complex ix_pow(Complex x, double p) {
    return std::exp(p * std::log(Complex(0.0, 1.0) * x));
}

// Trial wave function (ix)^c exp(a (ix)^b).
inline Complex trial_psi(const VariationalParams& p, Complex x) {
    const Complex t = Complex(0.0, 1.0) * x;
    return std::exp(p.c() * std::log(t) + p.a() * std::exp(p.b() * std::log(t)));
}

// -psi'' for the trial state, i.e. d^2/dt^2 in t = ix:
//   [c(c-1) t^{c-2} + ab(b+2c-1) t^{b+c-2} + a^2 b^2 t^{2b+c-2}] e^{a t^b}.
inline Complex trial_neg_psi_second(const VariationalParams& p, Complex x) {
    const double a = p.a();
    const double b = p.b();
    const double c = p.c();
    const Complex t = Complex(0.0, 1.0) * x;
    const Complex lt = std::log(t);
    const Complex envelope = std::exp(c * lt + a * std::exp(b * lt));
    const Complex poly = c * (c - 1.0) * std::exp(-2.0 * lt) +
                         a * b * (b + 2.0 * c - 1.0) * std::exp((b - 2.0) * lt) +
                         a * a * b * b * std::exp((2.0 * b - 2.0) * lt);
    return poly * envelope;
}

struct ContourSpec {
    double b_shape;
    double r_max;
    double arc_radius;
    int nodes_per_segment;
};

// Scale the contour to the integrand: tail cut where the decay exponent
// a r^b reaches 50, arc radius well inside the classical scale a^{-1/b}.
inline ContourSpec build_contour(double b_shape, double a) {
    if (!(a > 0.0)) throw DomainError("build_contour: decay scale must be > 0");
    if (!(b_shape > 1.0)) throw DomainError("build_contour: shape must be > 1");
    const double r_max = std::pow(50.0 / a, 1.0 / b_shape);
    const double arc_radius = 0.05 * std::pow(a, -1.0 / b_shape);
    return {b_shape, r_max, arc_radius, 64};
}

namespace detail {

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// Legendre recurrence; cached per order.
inline const std::pair<std::vector<double>, std::vector<double>>&
gauss_legendre(int n) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = z;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

template <class F>
Complex gl_segment(F&& f, double lo, double hi, int n) {
    const auto& [xs, ws] = gauss_legendre(n);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < xs.size(); ++k)
        acc += ws[k] * f(mid + half * xs[k]);
    return half * acc;
}

// Dyadic radial breakpoints [r0, 2 r0, 4 r0, ..., r_max]: segment width
// tracks the local variation scale of exp(-a r^b).
inline std::vector<double> ray_breakpoints(double r0, double r_max) {
    std::vector<double> bp{r0};
    for (double r = 2.0 * r0; r < r_max; r *= 2.0) bp.push_back(r);
    bp.push_back(r_max);
    return bp;
}

inline Complex integrate_once(const std::function<Complex(Complex)>& f,
                              const ContourSpec& c, int nodes) {
    const auto [theta_l, theta_r] = contour_angles(c.b_shape);
    const Complex dir_l = std::exp(Complex(0.0, theta_l));
    const Complex dir_r = std::exp(Complex(0.0, theta_r));
    const auto bp = ray_breakpoints(c.arc_radius, c.r_max);

    // Path runs from the left ray tip inward, around the arc through -pi/2,
    // then outward along the right ray.
    Complex total{0.0, 0.0};
    for (std::size_t s = 0; s + 1 < bp.size(); ++s)
        total -= dir_l * gl_segment([&](double r) { return f(dir_l * r); },
                                    bp[s], bp[s + 1], nodes);
    total += gl_segment(
        [&](double phi) {
            const Complex x = c.arc_radius * std::exp(Complex(0.0, phi));
            return Complex(0.0, 1.0) * x * f(x);
        },
        theta_l, theta_r, nodes);
    for (std::size_t s = 0; s + 1 < bp.size(); ++s)
        total += dir_r * gl_segment([&](double r) { return f(dir_r * r); },
                                    bp[s], bp[s + 1], nodes);
    return total;
}

}  // namespace detail

// Composite Gauss-Legendre along the contour with node doubling until the
// relative change is below 1e-10; two failed doublings is an error.
inline Complex integrate(const std::function<Complex(Complex)>& f,
                         const ContourSpec& c) {
    if (c.nodes_per_segment < 16)
        throw DomainError("integrate: nodes_per_segment must be >= 16");
    if (!(c.arc_radius < c.r_max))
        throw DomainError("integrate: arc_radius must be below r_max");
    Complex prev = detail::integrate_once(f, c, c.nodes_per_segment);
    for (int doubling = 1; doubling <= 2; ++doubling) {
        const Complex cur =
            detail::integrate_once(f, c, c.nodes_per_segment << doubling);
        if (std::abs(cur - prev) <= 1e-10 * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureError("integrate: node doubling did not converge");
}

// <psi H psi> / <psi psi> with H = -d^2/dx^2 + V evaluated analytically on
// the trial state; the x-independent check on every closed-form energy.
inline Complex rayleigh_quotient(const PowerSumPotential& v, const VariationalParams& p,
                                 const ContourSpec& c) {
    if (!wedge_check(v.dominant_power(), p.b()))
        throw WedgeError("rayleigh_quotient: contour shape outside decay wedges");
    auto numer = [&](Complex x) {
        Complex h_psi = trial_neg_psi_second(p, x);
        const Complex psi = trial_psi(p, x);
        for (const auto& t : v.terms) h_psi += t.coeff * ix_pow(x, t.power) * psi;
        return trial_psi(p, x) * h_psi;
    };
    auto denom = [&](Complex x) {
        const Complex psi = trial_psi(p, x);
        return psi * psi;
    };
    return integrate(numer, c) / integrate(denom, c);
}

}  // namespace ptvar
