#pragma once

// Exact-reference solver: fixed-step RK4 integration of
//   -psi'' - (ix)^N psi = E psi
// inward along the wedge-center rays, eigenvalues from the matching
// Wronskian at the origin, matched eigenfunctions, exact moments on the ray
// contour, axis nodes, and orthogonality checks.

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "ptvar/contour_quad.hpp"
#include "ptvar/domain.hpp"
#include "ptvar/errors.hpp"

namespace ptvar {

struct ShootingConfig {
    double r_start;
    Complex match_point{0.0, 0.0};  // only the origin is supported
    int steps = 20000;
    double root_tol = 1e-10;
};

// Ray length with the WKB decay exponent 2 r^{(N+2)/2} / (N+2) equal to
// `target` at the start point; the tail below the start is then negligible
// at double precision.
inline double oracle_r_start(const ModelSpec& m, double target = 30.0) {
    return std::pow((m.n_power + 2.0) * target / 2.0, 2.0 / (m.n_power + 2.0));
}

inline ShootingConfig default_shooting_config(const ModelSpec& m) {
    return {oracle_r_start(m), Complex{0.0, 0.0}, 20000, 1e-10};
}

namespace detail {

inline void validate_shooting(const ModelSpec& m, const ShootingConfig& cfg) {
    if (!(cfg.r_start > 0.0) || cfg.steps < 100 || cfg.steps % 2 != 0)
        throw StepError("shooting: need r_start > 0 and an even step count >= 100");
    if (std::abs(cfg.match_point) != 0.0)
        throw DomainError("shooting: only origin matching is supported");
    const double wkb_exponent =
        2.0 / (m.n_power + 2.0) * std::pow(cfg.r_start, (m.n_power + 2.0) / 2.0);
    if (wkb_exponent < 25.0)
        throw DomainError("shooting: r_start is not deep in the asymptotic regime");
}

struct RayState {
    Complex u;         // psi in the running scale
    Complex v;         // d psi / dr in the running scale
    double log_scale;  // psi_true = u * exp(log_scale)
};

struct RaySamplePoint {
    double r;
    Complex u;
    Complex v;
    double log_scale;
};

// Integrate u' = v, v' = -e^{2 i theta} (E + C r^N) u from r_start to 0,
// C = exp(i N (theta + pi/2)), so (ix)^N costs one real pow per evaluation.
// Initial data is the decaying WKB branch; (u, v) is renormalized whenever
// |u| overflows the comfortable range, tracked by log_scale.
inline RayState shoot_ray(const ModelSpec& m, double energy, double theta,
                          const ShootingConfig& cfg,
                          std::vector<RaySamplePoint>* keep = nullptr) {
    const double N = m.n_power;
    const Complex e2 = std::exp(Complex(0.0, 2.0 * theta));
    const Complex c_pow = std::exp(Complex(0.0, N * (theta + M_PI / 2.0)));
    auto q = [&](double r) { return energy + c_pow * std::pow(r, N); };

    Complex lam = std::sqrt(-e2 * q(cfg.r_start));
    if ((std::exp(Complex(0.0, theta)) * lam).real() > 0.0) lam = -lam;

    RayState s{Complex(1.0, 0.0), lam, 0.0};
    const double h = -cfg.r_start / cfg.steps;
    double r = cfg.r_start;
    if (keep) {
        keep->clear();
        keep->reserve(static_cast<std::size_t>(cfg.steps) + 1);
        keep->push_back({r, s.u, s.v, s.log_scale});
    }
    auto rhs = [&](double rr, Complex u, Complex v, Complex& du, Complex& dv) {
        du = v;
        dv = -e2 * q(rr) * u;
    };
    for (int k = 0; k < cfg.steps; ++k) {
        Complex k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
        rhs(r, s.u, s.v, k1u, k1v);
        rhs(r + h / 2.0, s.u + h / 2.0 * k1u, s.v + h / 2.0 * k1v, k2u, k2v);
        rhs(r + h / 2.0, s.u + h / 2.0 * k2u, s.v + h / 2.0 * k2v, k3u, k3v);
        rhs(r + h, s.u + h * k3u, s.v + h * k3v, k4u, k4v);
        s.u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        s.v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        r += h;
        const double mag = std::abs(s.u);
        if (!std::isfinite(mag) || !std::isfinite(std::abs(s.v)))
            throw OverflowError("shoot_ray: state overflowed between renormalizations");
        if (mag > 1e100) {
            s.u /= mag;
            s.v /= mag;
            s.log_scale += std::log(mag);
        }
        if (keep) keep->push_back({r, s.u, s.v, s.log_scale});
    }
    return s;
}

}  // namespace detail

// Scale-normalized Wronskian of the two inward ray solutions at the origin:
//   (psi_L psi'_R - psi'_L psi_R) / (|psi_L psi'_R| + |psi'_L psi_R|)
// with psi' = d/dx. Real for real E (PT pairs the rays by conjugation);
// zero exactly at eigenvalues.
inline Complex shoot(const ModelSpec& m, double energy, const ShootingConfig& cfg) {
    detail::validate_shooting(m, cfg);
    const WedgeGeometry wg = wedge_geometry(m);
    const auto left = detail::shoot_ray(m, energy, wg.theta_left, cfg);
    const auto right = detail::shoot_ray(m, energy, wg.theta_right, cfg);
    const Complex dl = std::exp(Complex(0.0, -wg.theta_left)) * left.v;
    const Complex dr = std::exp(Complex(0.0, -wg.theta_right)) * right.v;
    const Complex w = left.u * dr - dl * right.u;
    const double scale = std::abs(left.u * dr) + std::abs(dl * right.u);
    return w / scale;
}

// Root of the real mismatch inside the bracket by the Illinois variant of
// regula falsi, to cfg.root_tol in energy.
inline double eigenvalue(const ModelSpec& m, std::pair<double, double> bracket,
                         const ShootingConfig& cfg) {
    double a = bracket.first;
    double b = bracket.second;
    double fa = shoot(m, a, cfg).real();
    double fb = shoot(m, b, cfg).real();
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw NoRootInBracket("eigenvalue: mismatch does not change sign in bracket");
    double c = b;
    int side = 0;
    for (int it = 0; it < 200; ++it) {
        c = (a * fb - b * fa) / (fb - fa);
        if (!(std::min(a, b) < c && c < std::max(a, b))) c = 0.5 * (a + b);
        const double fc = shoot(m, c, cfg).real();
        if (std::abs(b - a) < cfg.root_tol) return c;
        if (fa * fc < 0.0) {
            b = c;
            fb = fc;
            if (side == -1) fa /= 2.0;
            side = -1;
        } else {
            a = c;
            fa = fc;
            if (side == +1) fb /= 2.0;
            side = +1;
        }
    }
    return c;
}

// Scan the mismatch from E = 0.5 in steps of 0.25 and refine each sign
// change; the bracketing recipe behind the --oracle paths.
inline std::vector<double> scan(const ModelSpec& m, double e_max,
                                const ShootingConfig& cfg) {
    std::vector<double> roots;
    double prev_e = 0.5;
    double prev_f = shoot(m, prev_e, cfg).real();
    for (double e = 0.75; e <= e_max + 1e-12; e += 0.25) {
        const double f = shoot(m, e, cfg).real();
        if (prev_f * f < 0.0) roots.push_back(eigenvalue(m, {prev_e, e}, cfg));
        prev_e = e;
        prev_f = f;
    }
    return roots;
}

struct OracleSample {
    Complex x;
    Complex psi;
    Complex dpsi;  // d psi / dx
};

struct EigenSolution {
    double energy;
    std::vector<OracleSample> samples;  // left infinity -> origin, origin -> right infinity
    std::vector<Complex> node_list;
    int steps_per_ray;
    double theta_left;
    double theta_right;
    double r_start;
    Complex psi_origin;
    Complex dpsi_origin;
    Complex mismatch;
};

namespace detail {

// Sign changes of the PT-real axis restriction psi(-iy), integrating
// psi_yy = (E + y^N) psi outward from the matched origin data. For y > 0
// the coefficient is positive, so the restriction is non-oscillatory and
// all sign changes sit near the origin.
inline std::vector<Complex> axis_node_scan(const ModelSpec& m, double energy,
                                           Complex psi0, Complex dpsi0, double y_max,
                                           int steps) {
    std::vector<Complex> nodes;
    if (std::abs(psi0) < 1e-6 * std::max(std::abs(dpsi0), 1e-300))
        nodes.push_back(Complex(0.0, 0.0));
    double u = psi0.real();
    double v = (Complex(0.0, -1.0) * dpsi0).real();  // d/dy = -i d/dx on x = -iy
    const double h = y_max / steps;
    double y = 0.0;
    auto rhs = [&](double yy, double uu) { return (energy + std::pow(yy, m.n_power)) * uu; };
    double prev = u;
    for (int k = 0; k < steps; ++k) {
        const double k1u = v, k1v = rhs(y, u);
        const double k2u = v + h / 2.0 * k1v, k2v = rhs(y + h / 2.0, u + h / 2.0 * k1u);
        const double k3u = v + h / 2.0 * k2v, k3v = rhs(y + h / 2.0, u + h / 2.0 * k2u);
        const double k4u = v + h * k3v, k4v = rhs(y + h, u + h * k3u);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        y += h;
        const double mag = std::abs(u);
        if (mag > 1e100) {
            u /= mag;
            v /= mag;
            prev /= mag;
        }
        if (prev * u < 0.0)
            nodes.push_back(Complex(0.0, -(y - h * u / (u - prev))));
        prev = u;
    }
    return nodes;
}

}  // namespace detail

// Matched global eigenfunction: both rays sampled, right ray rescaled to the
// left ray's origin value, overall phase fixed by making the dominant of
// psi(0) and -i psi'(0) real and positive, deep-tail samples restored from
// the tracked log scale.
inline EigenSolution eigenfunction(const ModelSpec& m, double energy,
                                   const ShootingConfig& cfg) {
    detail::validate_shooting(m, cfg);
    const WedgeGeometry wg = wedge_geometry(m);
    std::vector<detail::RaySamplePoint> raw_l, raw_r;
    const auto left = detail::shoot_ray(m, energy, wg.theta_left, cfg, &raw_l);
    const auto right = detail::shoot_ray(m, energy, wg.theta_right, cfg, &raw_r);

    const Complex dir_l = std::exp(Complex(0.0, wg.theta_left));
    const Complex dir_r = std::exp(Complex(0.0, wg.theta_right));
    const Complex dl = left.v / dir_l;
    const Complex dr = right.v / dir_r;
    const Complex w = left.u * dr - dl * right.u;
    const double wscale = std::abs(left.u * dr) + std::abs(dl * right.u);
    const Complex mismatch = w / wscale;
    if (std::abs(mismatch) > 1e-6)
        throw DomainError("eigenfunction: energy is not an eigenvalue at tolerance");

    const Complex sigma = left.u / right.u;
    const Complex z = std::abs(left.u) >= std::abs(Complex(0.0, -1.0) * dl)
                          ? left.u
                          : Complex(0.0, -1.0) * dl;
    const Complex phase = std::abs(z) / z;

    EigenSolution sol{energy,
                      {},
                      {},
                      cfg.steps,
                      wg.theta_left,
                      wg.theta_right,
                      cfg.r_start,
                      phase * left.u,
                      phase * dl,
                      mismatch};
    sol.samples.reserve(2 * (static_cast<std::size_t>(cfg.steps) + 1));
    for (const auto& p : raw_l) {
        const double damp = std::exp(p.log_scale - left.log_scale);
        sol.samples.push_back(
            {p.r * dir_l, phase * p.u * damp, phase * (p.v / dir_l) * damp});
    }
    for (auto it = raw_r.rbegin(); it != raw_r.rend(); ++it) {
        const double damp = std::exp(it->log_scale - right.log_scale);
        sol.samples.push_back({it->r * dir_r, phase * sigma * it->u * damp,
                               phase * sigma * (it->v / dir_r) * damp});
    }
    sol.node_list =
        detail::axis_node_scan(m, energy, sol.psi_origin, sol.dpsi_origin, 3.0, 6000);
    return sol;
}

namespace detail {

// Composite Simpson of f over one sampled ray, ordered origin -> infinity.
template <class F>
Complex simpson_ray(const std::vector<OracleSample>& ray, double h, F&& f) {
    Complex acc = f(ray.front()) + f(ray.back());
    for (std::size_t k = 1; k + 1 < ray.size(); ++k)
        acc += (k % 2 == 1 ? 4.0 : 2.0) * f(ray[k]);
    return acc * (h / 3.0);
}

template <class FL, class FR>
Complex ray_contour_integral(const EigenSolution& s, FL&& f_left, FR&& f_right) {
    const std::size_t n = static_cast<std::size_t>(s.steps_per_ray) + 1;
    std::vector<OracleSample> ray_l(s.samples.begin(), s.samples.begin() + n);
    std::vector<OracleSample> ray_r(s.samples.begin() + n, s.samples.end());
    std::reverse(ray_l.begin(), ray_l.end());  // origin -> infinity
    const double h = s.r_start / s.steps_per_ray;
    const Complex el = std::exp(Complex(0.0, s.theta_left));
    const Complex er = std::exp(Complex(0.0, s.theta_right));
    return -el * simpson_ray(ray_l, h, f_left) + er * simpson_ray(ray_r, h, f_right);
}

}  // namespace detail

// <x^P> = ∫ x^P psi^2 / ∫ psi^2 over the two rays, with x^P continued as
// exp(-i pi P / 2) (ix)^P; composite Simpson on the stored samples.
inline Complex exact_moment(const ModelSpec& m, const EigenSolution& s, double power) {
    (void)m;
    const Complex rot = std::exp(Complex(0.0, -M_PI * power / 2.0));
    auto weighted = [&](const OracleSample& p) {
        if (std::abs(p.x) == 0.0 && power > 0.0) return Complex(0.0, 0.0);
        return rot * ix_pow(p.x, power) * p.psi * p.psi;
    };
    auto plain = [](const OracleSample& p) { return p.psi * p.psi; };
    const Complex num = detail::ray_contour_integral(s, weighted, weighted);
    const Complex den = detail::ray_contour_integral(s, plain, plain);
    return num / den;
}

// ∫ psi_a psi_b over the rays, normalized by the geometric mean of the two
// signed-norm magnitudes; near zero for distinct eigenvalues.
inline Complex orthogonality(const EigenSolution& a, const EigenSolution& b) {
    if (a.steps_per_ray != b.steps_per_ray ||
        std::abs(a.r_start - b.r_start) > 1e-12 ||
        std::abs(a.theta_left - b.theta_left) > 1e-12)
        throw DomainError("orthogonality: states sampled on different grids");
    auto cross = [&](const OracleSample& pa, const OracleSample& pb) {
        return pa.psi * pb.psi;
    };
    const std::size_t n = static_cast<std::size_t>(a.steps_per_ray) + 1;
    auto piece = [&](std::size_t off) {
        std::vector<OracleSample> ra(a.samples.begin() + off,
                                     a.samples.begin() + off + n);
        std::vector<OracleSample> rb(b.samples.begin() + off,
                                     b.samples.begin() + off + n);
        const bool left = off == 0;
        if (left) {
            std::reverse(ra.begin(), ra.end());
            std::reverse(rb.begin(), rb.end());
        }
        const double h = a.r_start / a.steps_per_ray;
        Complex acc = cross(ra.front(), rb.front()) + cross(ra.back(), rb.back());
        for (std::size_t k = 1; k + 1 < ra.size(); ++k)
            acc += (k % 2 == 1 ? 4.0 : 2.0) * cross(ra[k], rb[k]);
        const Complex dir =
            std::exp(Complex(0.0, left ? a.theta_left : a.theta_right));
        return (left ? -dir : dir) * acc * (h / 3.0);
    };
    const Complex overlap = piece(0) + piece(n);
    auto self = [&](const EigenSolution& s) {
        return detail::ray_contour_integral(
            s, [](const OracleSample& p) { return p.psi * p.psi; },
            [](const OracleSample& p) { return p.psi * p.psi; });
    };
    return overlap / std::sqrt(std::abs(self(a)) * std::abs(self(b)));
}

}  // namespace ptvar
