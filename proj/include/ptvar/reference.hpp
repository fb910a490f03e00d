#pragma once

// Frozen reference datasets the suite reproduces: ground-state parameters
// and energies, the probe grid around the N=4 optimum, normalized moments,
// excited-state data, node locations, and exact first moments. Each dataset
// carries a stable id used in comparison reports.

#include <array>
#include <complex>
#include <optional>

namespace ptvar::reference {

struct GroundRow {
    double n;
    double alpha, beta, gamma;
    double e_var;
    double e_exact;
    double rel_err_percent;
};

// id: ground-params/N=<n>, ground-energy/N=<n>, ground-energy-exact/N=<n>
inline constexpr std::array<GroundRow, 3> ground_rows{{
    {3.0, 0.7207, 0.3855, -0.1570, 1.156754, 1.156267, 0.042},
    {4.0, 0.5800, 0.3185, -0.2745, 1.478023, 1.477149, 0.062},
    {5.0, 0.4895, 0.2720, -0.3610, 1.909382, 1.908265, 0.059},
}};

inline const GroundRow* ground_row(double n) {
    for (const auto& r : ground_rows)
        if (r.n == n) return &r;
    return nullptr;
}

struct ProbeRow {
    double beta, gamma;
    double energy;  // reference value after rounding to 6 decimals
};

// id: probe-grid/N=4: the optimum and its four neighbors, all of which
// evaluate below the center.
inline constexpr std::array<ProbeRow, 5> probe_rows_n4{{
    {0.3185, -0.2745, 1.478023},
    {0.3185, -0.2750, 1.478022},
    {0.3185, -0.2740, 1.478022},
    {0.3186, -0.2745, 1.478022},
    {0.3184, -0.2745, 1.478022},
}};

struct MomentRow {
    double n;
    int p;
    std::complex<double> value;  // normalized <x^P> at the reference parameters
};

// id: moments/N=<n>/P=<p>
inline const std::array<MomentRow, 15> moment_rows{{
    {3.0, 1, {0.0, -0.590686}},
    {3.0, 2, {-0.000767, 0.0}},
    {3.0, 3, {0.0, -0.462705}},
    {3.0, 4, {-0.385363, 0.0}},
    {3.0, 5, {0.0, -0.363227}},
    {4.0, 1, {0.0, -0.867264}},
    {4.0, 2, {-0.518220, 0.0}},
    {4.0, 3, {0.0, 0.000869}},
    {4.0, 4, {-0.492631, 0.0}},
    {4.0, 5, {0.0, 0.635997}},
    {5.0, 1, {0.0, -1.013266}},
    {5.0, 2, {-0.864749, 0.0}},
    {5.0, 3, {0.0, 0.518217}},
    {5.0, 4, {0.002080, 0.0}},
    {5.0, 5, {0.0, 0.545538}},
}};

inline std::optional<std::complex<double>> moment_value(double n, int p) {
    for (const auto& r : moment_rows)
        if (r.n == n && r.p == p) return r.value;
    return std::nullopt;
}

// id: exact-moment/N=<n>: first moment of the exact ground state,
// purely imaginary; stored as the imaginary part.
inline constexpr std::array<std::pair<double, double>, 3> exact_first_moments{{
    {3.0, -0.590073},
    {4.0, -0.866858},
    {5.0, -1.013102},
}};

inline std::optional<double> exact_first_moment(double n) {
    for (const auto& [nn, v] : exact_first_moments)
        if (nn == n) return v;
    return std::nullopt;
}

struct ExcitedParamsRow {
    double n;
    int state;  // excited-state index
    double alpha, beta, gamma;
};

// id: excited-params/N=<n>/n=<state>
inline constexpr std::array<ExcitedParamsRow, 3> excited_params_rows{{
    {3.0, 1, 0.55750, 0.3568, -0.329},
    {3.0, 2, 0.39925, 0.3255, -0.466},
    {4.0, 1, 0.41763, 0.2915, -0.614},
}};

inline const ExcitedParamsRow* excited_params_row(double n, int state) {
    for (const auto& r : excited_params_rows)
        if (r.n == n && r.state == state) return &r;
    return nullptr;
}

struct ExcitedEnergyRow {
    double n;
    int state;
    double e_var;
    double e_exact;
};

// id: excited-energy/N=<n>/n=<state>, excited-energy-exact/N=<n>/n=<state>
inline constexpr std::array<ExcitedEnergyRow, 3> excited_energy_rows{{
    {3.0, 1, 4.11738, 4.1092},
    {3.0, 2, 7.53886, 7.5621},
    {4.0, 1, 6.03769, 6.0033},
}};

inline const ExcitedEnergyRow* excited_energy_row(double n, int state) {
    for (const auto& r : excited_energy_rows)
        if (r.n == n && r.state == state) return &r;
    return nullptr;
}

struct NodeRow {
    double n;
    int state;
    double y;  // node at x = -i y
};

// id: node/N=<n>/n=<state>: first-excited node on the negative imaginary
// axis for the trial-family states.
inline constexpr std::array<NodeRow, 2> variational_node_rows{{
    {3.0, 1, 0.703},
    {4.0, 1, 0.972},
}};

// id: node-exact/N=3/n=1: the reference value printed for the exact state.
inline constexpr double exact_node_n3_y = 0.533;

inline const NodeRow* variational_node_row(double n, int state) {
    for (const auto& r : variational_node_rows)
        if (r.n == n && r.state == state) return &r;
    return nullptr;
}

}  // namespace ptvar::reference
