#pragma once

// Supersymmetric hierarchy: superpotential from a trial ground state,
// partner potentials, iterated levels, excited-state energies, chained-
// operator wave functions, their nodes, and signed norms.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptvar/closedform.hpp"
#include "ptvar/contour_quad.hpp"
#include "ptvar/domain.hpp"
#include "ptvar/errors.hpp"
#include "ptvar/optimizer.hpp"

namespace ptvar {

// W(x) = sum_j w_j (ix)^{q_j}, real coefficients.
struct Superpotential {
    std::vector<PowerSumPotential::Term> terms;
};

// W = -psi'/(i psi) for psi = (ix)^c exp(a (ix)^b):
//   W = -c (ix)^{-1} - a b (ix)^{b-1}.
inline Superpotential superpotential_from_trial(const VariationalParams& p) {
    PowerSumPotential merged({{-p.c(), -1.0}, {-p.a() * p.b(), p.b() - 1.0}});
    return {std::move(merged.terms)};
}

// Partner potential V = -W^2 - W'/i, expanded in powers of (ix) and merged.
inline PowerSumPotential partner_potential(const Superpotential& w) {
    std::vector<PowerSumPotential::Term> raw;
    for (const auto& j : w.terms) {
        for (const auto& k : w.terms) raw.push_back({-j.coeff * k.coeff, j.power + k.power});
        raw.push_back({-j.coeff * j.power, j.power - 1.0});
    }
    return PowerSumPotential(std::move(raw));
}

// The factorized-level potential W'/i - W^2; equals the level potential
// (ground shifted to zero) exactly when the trial state is exact.
inline PowerSumPotential factorization_potential(const Superpotential& w) {
    std::vector<PowerSumPotential::Term> raw;
    for (const auto& j : w.terms) {
        for (const auto& k : w.terms) raw.push_back({-j.coeff * k.coeff, j.power + k.power});
        raw.push_back({j.coeff * j.power, j.power - 1.0});
    }
    return PowerSumPotential(std::move(raw));
}

// One rung of the hierarchy. `potential` is stored with this level's ground
// energy already subtracted (the factorization frame); energy_offset is the
// running sum of subtracted energies, so the state generated by level m has
// absolute energy energy_offset.
struct HierarchyLevel {
    int index;  // 1-based
    PowerSumPotential potential;
    double energy_offset;
    std::optional<std::pair<VariationalParams, double>> ground;
};

namespace detail {

inline PowerSumPotential shift_by(PowerSumPotential v, double constant) {
    auto terms = std::move(v.terms);
    terms.push_back({constant, 0.0});
    return PowerSumPotential(std::move(terms));
}

}  // namespace detail

// Alternate (solve ground) -> (subtract energy, form W, form partner).
// Level 1 solves the base model with alpha eliminated in closed form; deeper
// levels have no closed-form alpha and search the full parameter space,
// seeded at the previous level's optimum. Depth beyond 3 levels is allowed
// but accuracy degrades with each rung.
inline std::vector<HierarchyLevel> build_hierarchy(
    const ModelSpec& model, int levels, const OptimizerConfig& base_cfg = {},
    std::optional<std::pair<double, double>> base_seed = std::nullopt) {
    if (levels < 1) throw DomainError("build_hierarchy: levels must be >= 1");
    std::vector<HierarchyLevel> out;
    out.reserve(static_cast<std::size_t>(levels));

    OptimizerConfig partner_cfg = base_cfg;
    partner_cfg.max_iter = std::max(base_cfg.max_iter, 4000);

    PowerSumPotential current = PowerSumPotential::single_power(model.n_power);
    double offset = 0.0;
    for (int m = 1; m <= levels; ++m) {
        try {
            const StationaryPoint sp =
                m == 1 ? find_stationary(model, base_seed, base_cfg)
                       : find_stationary_full(current, out.back().ground->first,
                                              partner_cfg);
            offset += sp.energy;
            out.push_back({m, detail::shift_by(current, -sp.energy), offset,
                           std::make_pair(sp.params, sp.energy)});
        } catch (const NoConvergence& e) {
            throw NoConvergence("level " + std::to_string(m) + ": " + e.what());
        } catch (const InfeasibleSeed& e) {
            throw InfeasibleSeed("level " + std::to_string(m) + ": " + e.what());
        }
        if (m < levels)
            current = partner_potential(superpotential_from_trial(out.back().ground->first));
    }
    return out;
}

// Converged parameters of the level whose ground state generates excited
// state n (n = 0 is the base ground state).
inline const VariationalParams& excited_params(const std::vector<HierarchyLevel>& h,
                                               int n) {
    if (n < 0 || static_cast<std::size_t>(n) >= h.size() || !h[static_cast<std::size_t>(n)].ground)
        throw NotComputed("excited_params: hierarchy not built through that level");
    return h[static_cast<std::size_t>(n)].ground->first;
}

// E_n as the partial sum of level ground energies.
inline double excited_energy(const std::vector<HierarchyLevel>& h, int n) {
    if (n < 0 || static_cast<std::size_t>(n) >= h.size())
        throw NotComputed("excited_energy: hierarchy not built through that level");
    return h[static_cast<std::size_t>(n)].energy_offset;
}

// Excited state as a chain of lowering operators applied to a deep level's
// trial ground state: base params, the W of each applied operator, the
// energy scale, and the expanded power-sum prefactor R(ix) with
// psi_n(x) = R(ix) (ix)^c exp(a (ix)^b) / scale.
struct WaveFunctionExpr {
    VariationalParams base;
    std::vector<Superpotential> chain;  // chain[0] applied last (outermost)
    double scale;
    std::vector<PowerSumPotential::Term> prefactor;
};

namespace detail {

// A_-(R phi) = [R_t + R (c/t + a b t^{b-1}) - W R] phi in t = ix, where
// (a, b, c) belong to the carried envelope phi.
inline std::vector<PowerSumPotential::Term> apply_lowering(
    const std::vector<PowerSumPotential::Term>& r, const VariationalParams& phi,
    const Superpotential& w) {
    const double a = phi.a();
    const double b = phi.b();
    const double c = phi.c();
    std::vector<PowerSumPotential::Term> raw;
    for (const auto& term : r) {
        raw.push_back({term.coeff * term.power, term.power - 1.0});
        raw.push_back({term.coeff * c, term.power - 1.0});
        raw.push_back({term.coeff * a * b, term.power + b - 1.0});
        for (const auto& wj : w.terms) raw.push_back({-term.coeff * wj.coeff, term.power + wj.power});
    }
    return PowerSumPotential(std::move(raw)).terms;
}

}  // namespace detail

// psi_n built from a hierarchy with at least n+1 solved levels: apply the
// levels' lowering operators, outermost first, to the level-(n+1) trial
// ground state; the scale is the product over applied operators of the
// partial energy sums they introduce.
inline WaveFunctionExpr wavefunction(const std::vector<HierarchyLevel>& h, int n) {
    if (n < 0 || static_cast<std::size_t>(n) >= h.size() || !h[static_cast<std::size_t>(n)].ground)
        throw NotComputed("wavefunction: hierarchy not built deep enough");
    const VariationalParams base = h[static_cast<std::size_t>(n)].ground->first;

    std::vector<Superpotential> chain;
    chain.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m)
        chain.push_back(superpotential_from_trial(h[static_cast<std::size_t>(m)].ground->first));

    std::vector<PowerSumPotential::Term> r{{1.0, 0.0}};
    for (int m = n - 1; m >= 0; --m)
        r = detail::apply_lowering(r, base, chain[static_cast<std::size_t>(m)]);

    double scale = 1.0;
    for (int m = 1; m <= n; ++m) {
        double partial = 0.0;
        for (int j = m; j <= n; ++j) partial += h[static_cast<std::size_t>(j)].ground->second;
        scale *= partial;
    }
    return {base, std::move(chain), scale, std::move(r)};
}

inline Complex evaluate(const WaveFunctionExpr& wf, Complex x) {
    const Complex t = Complex(0.0, 1.0) * x;
    const Complex lt = std::log(t);
    Complex r{0.0, 0.0};
    for (const auto& term : wf.prefactor) r += term.coeff * std::exp(term.power * lt);
    return r * std::exp(wf.base.c() * lt + wf.base.a() * std::exp(wf.base.b() * lt)) /
           wf.scale;
}

namespace detail {

// Prefactor R(y) on the negative imaginary axis (t = y > 0); the positive
// envelope y^c e^{a y^b} cannot vanish, so sign changes of the restriction
// are sign changes of R.
inline double axis_prefactor(const WaveFunctionExpr& wf, double y) {
    double r = 0.0;
    for (const auto& term : wf.prefactor) r += term.coeff * std::pow(y, term.power);
    return r;
}

}  // namespace detail

// Real-valued restriction y -> psi(-iy).
inline double axis_restriction(const WaveFunctionExpr& wf, double y) {
    if (!(y > 0.0)) throw DomainError("axis_restriction: y must be > 0");
    return detail::axis_prefactor(wf, y) *
           std::pow(y, wf.base.c()) * std::exp(wf.base.a() * std::pow(y, wf.base.b())) /
           wf.scale;
}

inline std::pair<double, double> default_node_range(const WaveFunctionExpr& wf) {
    return {1e-3, 5.0 * std::pow(wf.base.alpha, -wf.base.beta)};
}

// Zeros of the restriction to the negative imaginary axis, located by
// sign-change bracketing over 2000 panels and bisection to 1e-8, returned
// as points -iy in the complex plane.
inline std::vector<Complex> find_nodes(const WaveFunctionExpr& wf,
                                       std::optional<std::pair<double, double>> y_range =
                                           std::nullopt) {
    const auto [y_lo, y_hi] = y_range.value_or(default_node_range(wf));
    if (!(y_lo > 0.0) || !(y_hi > y_lo) || !std::isfinite(y_hi))
        throw DomainError("find_nodes: need finite 0 < y_lo < y_hi");
    constexpr int panels = 2000;
    std::vector<Complex> nodes;
    double prev_y = y_lo;
    double prev_f = detail::axis_prefactor(wf, prev_y);
    for (int i = 1; i <= panels; ++i) {
        const double y = y_lo + (y_hi - y_lo) * i / static_cast<double>(panels);
        const double f = detail::axis_prefactor(wf, y);
        if (prev_f == 0.0) {
            nodes.push_back(Complex(0.0, -prev_y));
        } else if (prev_f * f < 0.0) {
            double lo = prev_y;
            double hi = y;
            double flo = prev_f;
            while (hi - lo > 1e-8) {
                const double mid = 0.5 * (lo + hi);
                const double fm = detail::axis_prefactor(wf, mid);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            nodes.push_back(Complex(0.0, -0.5 * (lo + hi)));
        }
        prev_y = y;
        prev_f = f;
    }
    return nodes;
}

// Signed norm ∫_C psi^2 dx (square, not modulus): real up to quadrature
// noise, with sign (-1)^n along the hierarchy. The contour must lie in the
// decay wedges of the squared envelope exp(alpha (ix)^b).
inline Complex signed_norm(const WaveFunctionExpr& wf, const ContourSpec& c) {
    const double b = wf.base.b();
    if (!(c.b_shape > 2.0 * b / 3.0) || !(c.b_shape < 2.0 * b))
        throw WedgeError("signed_norm: contour rays outside the decay wedges");
    return integrate(
        [&](Complex x) {
            const Complex v = evaluate(wf, x);
            return v * v;
        },
        c);
}

}  // namespace ptvar
