#pragma once

// Stationary-point search for the reduced energy surface E(beta, gamma),
// saddle classification in the full (alpha, beta, gamma) space, and grid
// scans of the landscape. Derivative-free simplex descent plus a Newton
// polish on the finite-difference gradient.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "ptvar/closedform.hpp"
#include "ptvar/domain.hpp"
#include "ptvar/errors.hpp"

namespace ptvar {

struct OptimizerConfig {
    double simplex_scale = 0.01;
    int max_iter = 500;
    double grad_tol = 1e-9;   // inf-norm of the FD gradient of E
    double fd_scale = 1e-5;   // step = fd_scale * max(1, |coordinate|)
};

struct HessianSignature {
    int pos = 0;
    int neg = 0;
    int zero = 0;
};

struct StationaryPoint {
    VariationalParams params;
    double energy;
    double gradient_norm;
    std::array<double, 2> hessian2_eigs{0.0, 0.0};
    HessianSignature hessian3_signature{};
    bool classified = false;

    StationaryPoint(VariationalParams p, double e, double g)
        : params(p), energy(e), gradient_norm(g) {}
};

namespace detail {

inline double fd_step(double coord, double fd_scale) {
    return fd_scale * std::max(1.0, std::abs(coord));
}

template <std::size_t D, class F>
std::array<double, D> fd_gradient(F&& f, std::array<double, D> x, double fd_scale) {
    std::array<double, D> g{};
    for (std::size_t i = 0; i < D; ++i) {
        const double h = fd_step(x[i], fd_scale);
        const double xi = x[i];
        x[i] = xi + h;
        const double fp = f(x);
        x[i] = xi - h;
        const double fm = f(x);
        x[i] = xi;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

template <std::size_t D, class F>
std::array<std::array<double, D>, D> fd_hessian(F&& f, std::array<double, D> x,
                                                double fd_scale) {
    std::array<std::array<double, D>, D> H{};
    const double f0 = f(x);
    std::array<double, D> h{};
    for (std::size_t i = 0; i < D; ++i) h[i] = fd_step(x[i], fd_scale);
    for (std::size_t i = 0; i < D; ++i) {
        const double xi = x[i];
        x[i] = xi + h[i];
        const double fp = f(x);
        x[i] = xi - h[i];
        const double fm = f(x);
        x[i] = xi;
        H[i][i] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
    }
    for (std::size_t i = 0; i < D; ++i) {
        for (std::size_t j = i + 1; j < D; ++j) {
            const double xi = x[i];
            const double xj = x[j];
            x[i] = xi + h[i]; x[j] = xj + h[j];
            const double fpp = f(x);
            x[j] = xj - h[j];
            const double fpm = f(x);
            x[i] = xi - h[i]; x[j] = xj + h[j];
            const double fmp = f(x);
            x[j] = xj - h[j];
            const double fmm = f(x);
            x[i] = xi; x[j] = xj;
            H[i][j] = H[j][i] = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
        }
    }
    return H;
}

// Eigenvalues of a symmetric DxD matrix by cyclic Jacobi rotations,
// returned in ascending order.
template <std::size_t D>
std::array<double, D> sym_eigenvalues(std::array<std::array<double, D>, D> A) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = i + 1; j < D; ++j) off += A[i][j] * A[i][j];
        if (off < 1e-300) break;
        for (std::size_t p = 0; p < D; ++p) {
            for (std::size_t q = p + 1; q < D; ++q) {
                if (std::abs(A[p][q]) < 1e-300) continue;
                const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < D; ++k) {
                    const double akp = A[k][p];
                    const double akq = A[k][q];
                    A[k][p] = c * akp - s * akq;
                    A[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < D; ++k) {
                    const double apk = A[p][k];
                    const double aqk = A[q][k];
                    A[p][k] = c * apk - s * aqk;
                    A[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::array<double, D> eigs{};
    for (std::size_t i = 0; i < D; ++i) eigs[i] = A[i][i];
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

// Solve A x = b for small symmetric A by Gaussian elimination with
// partial pivoting.
template <std::size_t D>
std::array<double, D> solve_linear(std::array<std::array<double, D>, D> A,
                                   std::array<double, D> b) {
    for (std::size_t col = 0; col < D; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < D; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (std::abs(A[piv][col]) < 1e-300)
            throw DegenerateHessian("solve_linear: singular matrix");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = col + 1; r < D; ++r) {
            const double m = A[r][col] / A[col][col];
            for (std::size_t k = col; k < D; ++k) A[r][k] -= m * A[col][k];
            b[r] -= m * b[col];
        }
    }
    std::array<double, D> x{};
    for (std::size_t r = D; r-- > 0;) {
        double s = b[r];
        for (std::size_t k = r + 1; k < D; ++k) s -= A[r][k] * x[k];
        x[r] = s / A[r][r];
    }
    return x;
}

template <std::size_t D>
struct SimplexResult {
    std::array<double, D> x;
    double f;
    int iterations;
};

// Nelder-Mead minimization with the standard coefficient set
// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). Deterministic:
// fixed initial simplex, stable ordering.
template <std::size_t D, class F>
SimplexResult<D> nelder_mead(F&& f, const std::array<double, D>& x0, double scale,
                             int max_iter) {
    constexpr std::size_t M = D + 1;
    std::array<std::array<double, D>, M> pts;
    std::array<double, M> fv;
    pts[0] = x0;
    for (std::size_t i = 0; i < D; ++i) {
        pts[i + 1] = x0;
        pts[i + 1][i] += scale * std::max(1.0, std::abs(x0[i]));
    }
    for (std::size_t i = 0; i < M; ++i) fv[i] = f(pts[i]);

    std::array<std::size_t, M> order;
    auto sort_order = [&] {
        for (std::size_t i = 0; i < M; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t s, std::size_t t) { return fv[s] < fv[t]; });
    };

    int iter = 0;
    for (; iter < max_iter; ++iter) {
        sort_order();
        const std::size_t best = order[0];
        const std::size_t worst = order[M - 1];
        const std::size_t second = order[M - 2];

        double spread = 0.0;
        for (std::size_t i = 0; i < D; ++i)
            spread = std::max(spread, std::abs(pts[order[0]][i] - pts[worst][i]));
        if (spread < 1e-12 && std::isfinite(fv[best]) &&
            std::abs(fv[worst] - fv[best]) < 1e-14 * (1.0 + std::abs(fv[best])))
            break;

        std::array<double, D> centroid{};
        for (std::size_t i = 0; i < M; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < D; ++k) centroid[k] += pts[i][k];
        }
        for (std::size_t k = 0; k < D; ++k) centroid[k] /= static_cast<double>(D);

        auto along = [&](double t) {
            std::array<double, D> p;
            for (std::size_t k = 0; k < D; ++k)
                p[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
            return p;
        };

        const auto xr = along(-1.0);
        const double fr = f(xr);
        if (fr < fv[best]) {
            const auto xe = along(-2.0);
            const double fe = f(xe);
            if (fe < fr) {
                pts[worst] = xe;
                fv[worst] = fe;
            } else {
                pts[worst] = xr;
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[second]) {
            pts[worst] = xr;
            fv[worst] = fr;
            continue;
        }
        if (fr < fv[worst]) {
            const auto xc = along(-0.5);
            const double fc = f(xc);
            if (fc <= fr) {
                pts[worst] = xc;
                fv[worst] = fc;
                continue;
            }
        } else {
            const auto xc = along(0.5);
            const double fc = f(xc);
            if (fc < fv[worst]) {
                pts[worst] = xc;
                fv[worst] = fc;
                continue;
            }
        }
        for (std::size_t i = 0; i < M; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < D; ++k)
                pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
            fv[i] = f(pts[i]);
        }
    }
    sort_order();
    return {pts[order[0]], fv[order[0]], iter};
}

// Newton iteration on the FD gradient of a scalar field, driving the
// gradient inf-norm below grad_tol. Steps that fail `acceptable` or do not
// reduce the gradient norm are halved.
template <std::size_t D, class F, class Accept>
std::array<double, D> newton_polish(F&& f, std::array<double, D> x,
                                    const OptimizerConfig& cfg, Accept&& acceptable,
                                    const char* where) {
    auto grad_norm = [&](const std::array<double, D>& g) {
        double m = 0.0;
        for (double v : g) m = std::max(m, std::abs(v));
        return m;
    };
    auto g = fd_gradient<D>(f, x, cfg.fd_scale);
    double gn = grad_norm(g);
    for (int it = 0; it < 60 && gn >= cfg.grad_tol; ++it) {
        const auto H = fd_hessian<D>(f, x, cfg.fd_scale);
        std::array<double, D> rhs;
        for (std::size_t i = 0; i < D; ++i) rhs[i] = -g[i];
        const auto step = solve_linear<D>(H, rhs);
        double damping = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 25; ++bt, damping *= 0.5) {
            std::array<double, D> cand;
            for (std::size_t i = 0; i < D; ++i) cand[i] = x[i] + damping * step[i];
            if (!acceptable(cand)) continue;
            const auto gc = fd_gradient<D>(f, cand, cfg.fd_scale);
            const double gcn = grad_norm(gc);
            if (gcn < gn) {
                x = cand;
                g = gc;
                gn = gcn;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (gn >= cfg.grad_tol)
        throw NoConvergence(std::string(where) + ": gradient norm " +
                            std::to_string(gn) + " did not reach tolerance");
    return x;
}

inline int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int budget = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("PTVAR_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) budget = std::min(budget, cap);
    }
    return budget;
}

}  // namespace detail

using ReducedObjective = std::function<double(double, double)>;

// Locate the stationary point of the reduced surface inside the feasible
// region containing the seed: simplex ascent with infeasible evaluations
// mapped to -inf, then Newton polish on the FD gradient.
inline StationaryPoint find_stationary(const ReducedObjective& objective,
                                       const ModelSpec& model,
                                       std::optional<std::pair<double, double>> seed =
                                           std::nullopt,
                                       const OptimizerConfig& cfg = {}) {
    const auto [sb, sg] = seed.value_or(special_region_seed(model));
    if (classify_region(model, sb, sg).status != RegionStatus::Feasible)
        throw InfeasibleSeed("find_stationary: seed is not strictly feasible");

    auto feasible = [&](const std::array<double, 2>& x) {
        return classify_region(model, x[0], x[1]).status == RegionStatus::Feasible;
    };
    auto value = [&](const std::array<double, 2>& x) -> double {
        if (!feasible(x)) return -std::numeric_limits<double>::infinity();
        try {
            return objective(x[0], x[1]);
        } catch (const Error&) {
            return -std::numeric_limits<double>::infinity();
        }
    };
    auto neg = [&](const std::array<double, 2>& x) { return -value(x); };

    const auto nm = detail::nelder_mead<2>(neg, {sb, sg}, cfg.simplex_scale, cfg.max_iter);
    if (!std::isfinite(nm.f))
        throw NoConvergence("find_stationary: simplex failed to enter the feasible region");

    auto obj_arr = [&](const std::array<double, 2>& x) { return value(x); };
    const auto polished = detail::newton_polish<2>(obj_arr, nm.x, cfg, feasible,
                                                   "find_stationary");

    const auto g = detail::fd_gradient<2>(obj_arr, polished, cfg.fd_scale);
    const double gn = std::max(std::abs(g[0]), std::abs(g[1]));
    const double alpha = solve_alpha(model, polished[0], polished[1]);
    const double energy = objective(polished[0], polished[1]);
    return {{alpha, polished[0], polished[1]}, energy, gn};
}

inline StationaryPoint find_stationary(const ModelSpec& model,
                                       std::optional<std::pair<double, double>> seed =
                                           std::nullopt,
                                       const OptimizerConfig& cfg = {}) {
    return find_stationary(
        [&model](double be, double ga) { return reduced_energy(model, be, ga); }, model,
        seed, cfg);
}

// Fill hessian2_eigs (reduced surface, central FD) and hessian3_signature
// (full E(alpha, beta, gamma) FD Hessian) at a converged point.
inline StationaryPoint classify(const ReducedObjective& objective, const ModelSpec& model,
                                StationaryPoint point, const OptimizerConfig& cfg = {}) {
    auto red = [&](const std::array<double, 2>& x) { return objective(x[0], x[1]); };
    const std::array<double, 2> x2{point.params.beta, point.params.gamma_};
    const auto H2 = detail::fd_hessian<2>(red, x2, cfg.fd_scale);
    const auto e2 = detail::sym_eigenvalues<2>(H2);

    auto full = [&](const std::array<double, 3>& x) {
        return energy_functional(model, {x[0], x[1], x[2]});
    };
    const std::array<double, 3> x3{point.params.alpha, point.params.beta,
                                   point.params.gamma_};
    const auto H3 = detail::fd_hessian<3>(full, x3, cfg.fd_scale);
    const auto e3 = detail::sym_eigenvalues<3>(H3);

    const double floor = 1e-12 * std::abs(point.energy);
    for (double e : e2)
        if (std::abs(e) < floor)
            throw DegenerateHessian("classify: reduced Hessian eigenvalue below scale");
    for (double e : e3)
        if (std::abs(e) < floor)
            throw DegenerateHessian("classify: full Hessian eigenvalue below scale");

    point.hessian2_eigs = {e2[0], e2[1]};
    HessianSignature sig;
    for (double e : e3) (e > 0.0 ? sig.pos : sig.neg) += 1;
    point.hessian3_signature = sig;
    point.classified = true;
    return point;
}

inline StationaryPoint classify(const ModelSpec& model, StationaryPoint point,
                                const OptimizerConfig& cfg = {}) {
    return classify(
        [&model](double be, double ga) { return reduced_energy(model, be, ga); }, model,
        std::move(point), cfg);
}

// One landscape cell: region status plus the reduced energy when feasible.
struct ScanCell {
    RegionStatus status;
    double energy;  // NaN unless status == Feasible
};

struct LandscapeScan {
    std::vector<double> betas;
    std::vector<double> gammas;
    std::vector<ScanCell> cells;  // row-major: index = ib * gammas.size() + ig

    const ScanCell& at(std::size_t ib, std::size_t ig) const {
        return cells[ib * gammas.size() + ig];
    }
};

// Grid scan over (beta, gamma); infeasible and boundary cells are tagged,
// never errors. Cells are pure and evaluated in parallel up to the
// PTVAR_THREADS budget; output order is fixed regardless of thread count.
inline LandscapeScan landscape_scan(const ModelSpec& model,
                                    std::pair<double, double> beta_range,
                                    std::pair<double, double> gamma_range,
                                    std::pair<int, int> grid) {
    const auto [nb, ng] = grid;
    if (nb < 2 || ng < 2) throw DomainError("landscape_scan: grid must be at least 2x2");
    LandscapeScan scan;
    scan.betas.resize(static_cast<std::size_t>(nb));
    scan.gammas.resize(static_cast<std::size_t>(ng));
    for (int i = 0; i < nb; ++i)
        scan.betas[static_cast<std::size_t>(i)] =
            beta_range.first + (beta_range.second - beta_range.first) * i / (nb - 1.0);
    for (int j = 0; j < ng; ++j)
        scan.gammas[static_cast<std::size_t>(j)] =
            gamma_range.first + (gamma_range.second - gamma_range.first) * j / (ng - 1.0);
    scan.cells.resize(static_cast<std::size_t>(nb) * static_cast<std::size_t>(ng));

    auto fill_cell = [&](std::size_t idx) {
        const double be = scan.betas[idx / scan.gammas.size()];
        const double ga = scan.gammas[idx % scan.gammas.size()];
        const RegionClass rc = classify_region(model, be, ga);
        double e = std::numeric_limits<double>::quiet_NaN();
        if (rc.status == RegionStatus::Feasible) {
            try {
                e = reduced_energy(model, be, ga);
            } catch (const Error&) {
                e = std::numeric_limits<double>::quiet_NaN();
            }
        }
        scan.cells[idx] = {rc.status, e};
    };

    const std::size_t total = scan.cells.size();
    const int workers = std::min<int>(detail::thread_budget(),
                                      static_cast<int>(total));
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) fill_cell(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < total;
                     i += static_cast<std::size_t>(workers))
                    fill_cell(i);
            });
        }
        for (auto& t : pool) t.join();
    }
    return scan;
}

// Full three-parameter stationary-point search for potentials without a
// closed-form alpha elimination: simplex descent on the squared FD-gradient
// norm of E(alpha, beta, gamma), then Newton polish on the gradient itself.
// Feasibility follows the dominant power's decay wedges.
inline StationaryPoint find_stationary_full(const PowerSumPotential& v,
                                            const VariationalParams& seed,
                                            const OptimizerConfig& cfg = {}) {
    auto energy_at = [&](const std::array<double, 3>& x) -> double {
        if (!(x[0] > 0.0) || !(x[1] > 0.0))
            throw InfeasibleError("find_stationary_full: parameters out of range");
        return generalized_energy(v, {x[0], x[1], x[2]});
    };
    auto feasible = [&](const std::array<double, 3>& x) {
        try {
            (void)energy_at(x);
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    auto grad_sq = [&](const std::array<double, 3>& x) -> double {
        if (!feasible(x)) return std::numeric_limits<double>::infinity();
        std::array<double, 3> probe = x;
        for (std::size_t i = 0; i < 3; ++i) {
            const double h = detail::fd_step(x[i], cfg.fd_scale);
            probe[i] = x[i] + h;
            if (!feasible(probe)) return std::numeric_limits<double>::infinity();
            probe[i] = x[i] - h;
            if (!feasible(probe)) return std::numeric_limits<double>::infinity();
            probe[i] = x[i];
        }
        const auto g = detail::fd_gradient<3>(energy_at, x, cfg.fd_scale);
        return g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
    };

    const std::array<double, 3> x0{seed.alpha, seed.beta, seed.gamma_};
    if (!feasible(x0))
        throw InfeasibleSeed("find_stationary_full: seed is not feasible");

    const auto nm = detail::nelder_mead<3>(grad_sq, x0, cfg.simplex_scale, cfg.max_iter);
    if (!std::isfinite(nm.f))
        throw NoConvergence("find_stationary_full: simplex left the feasible region");

    const auto polished =
        detail::newton_polish<3>(energy_at, nm.x, cfg, feasible, "find_stationary_full");
    const auto g = detail::fd_gradient<3>(energy_at, polished, cfg.fd_scale);
    const double gn =
        std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2])});
    const VariationalParams params{polished[0], polished[1], polished[2]};
    return {params, generalized_energy(v, params), gn};
}

}  // namespace ptvar
