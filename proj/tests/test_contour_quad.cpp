#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "ptvar/closedform.hpp"
#include "ptvar/contour_quad.hpp"

using namespace ptvar;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("contour construction enforces decay and scale") {
    const ContourSpec c = build_contour(2.0, 1.0);
    CHECK(c.b_shape == 2.0);
    CHECK_THAT(1.0 * std::pow(c.r_max, 2.0), WithinRel(50.0, 1e-12));
    CHECK_THAT(c.arc_radius, WithinRel(0.05, 1e-12));
    CHECK(c.arc_radius < c.r_max);
    CHECK(c.nodes_per_segment >= 16);
    CHECK_THROWS_AS(build_contour(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(build_contour(2.0, 0.0), DomainError);
}

TEST_CASE("integrate validates the contour") {
    ContourSpec c = build_contour(2.0, 1.0);
    c.nodes_per_segment = 8;
    CHECK_THROWS_AS(integrate([](Complex) { return Complex{1.0, 0.0}; }, c),
                    DomainError);
    ContourSpec d = build_contour(2.0, 1.0);
    d.arc_radius = d.r_max * 2.0;
    CHECK_THROWS_AS(integrate([](Complex) { return Complex{1.0, 0.0}; }, d),
                    DomainError);
}

TEST_CASE("Gaussian squared integrates to sqrt(pi)") {
    const VariationalParams g{1.0, 0.5, 0.0};
    const ContourSpec c = build_contour(g.b(), 2.0 * g.a());
    const Complex v = integrate(
        [&](Complex x) {
            const Complex psi = trial_psi(g, x);
            return psi * psi;
        },
        c);
    CHECK_THAT(v.real(), WithinRel(std::sqrt(M_PI), 1e-10));
    CHECK_THAT(v.imag(), WithinAbs(0.0, 1e-12));
}

TEST_CASE("second-derivative closed form matches finite differences") {
    const VariationalParams p{0.7207, 0.3855, -0.1570};
    const Complex x{0.8, -0.9};
    const double h = 1e-5;
    const Complex num =
        -(trial_psi(p, x + h) - 2.0 * trial_psi(p, x) + trial_psi(p, x - h)) / (h * h);
    const Complex cf = trial_neg_psi_second(p, x);
    CHECK_THAT(std::abs(num - cf), WithinAbs(0.0, 1e-5 * std::abs(cf)));
}

TEST_CASE("Rayleigh quotient reproduces the closed-form energy") {
    const VariationalParams g{1.0, 0.5, 0.0};
    const Complex e2 = rayleigh_quotient(PowerSumPotential::single_power(2.0), g,
                                         build_contour(g.b(), 2.0 * g.a()));
    CHECK_THAT(e2.real(), WithinAbs(1.0, 1e-10));
    CHECK_THAT(e2.imag(), WithinAbs(0.0, 1e-10));

    const ModelSpec m{3.0};
    const VariationalParams p{0.72043277, 0.38557659, -0.15740188};
    const Complex e3 = rayleigh_quotient(PowerSumPotential::single_power(3.0), p,
                                         build_contour(p.b(), 2.0 * p.a()));
    CHECK_THAT(e3.real(), WithinRel(energy_functional(m, p), 1e-9));
    CHECK_THAT(e3.imag(), WithinAbs(0.0, 1e-9));
}

TEST_CASE("moments by quadrature match the gamma-ratio closed form") {
    const VariationalParams p{0.72043277, 0.38557659, -0.15740188};
    const ContourSpec c = build_contour(p.b(), 2.0 * p.a());
    auto psi2 = [&](Complex x) {
        const Complex v = trial_psi(p, x);
        return v * v;
    };
    const Complex den = integrate(psi2, c);
    for (double power : {1.0, 2.0, 3.0}) {
        const Complex quad =
            integrate([&](Complex x) { return ix_pow(x, power) * psi2(x); }, c) / den;
        CHECK_THAT(std::abs(quad - moment(p, power)), WithinAbs(0.0, 1e-9));
    }
}

TEST_CASE("integral value is independent of the arc detour radius") {
    const VariationalParams p{0.72043277, 0.38557659, -0.15740188};
    const ContourSpec c = build_contour(p.b(), 2.0 * p.a());
    ContourSpec wide = c;
    wide.arc_radius *= 3.0;
    auto f = [&](Complex x) {
        const Complex v = trial_psi(p, x);
        return v * v;
    };
    const Complex a = integrate(f, c);
    const Complex b = integrate(f, wide);
    CHECK_THAT(std::abs(a - b), WithinAbs(0.0, 1e-10 * std::abs(a)));
}

TEST_CASE("wedge gate rejects trial shapes outside the decay wedges") {
    // b = 1/0.9 is too shallow for a cubic dominant power.
    CHECK_THROWS_AS(rayleigh_quotient(PowerSumPotential::single_power(3.0),
                                      VariationalParams{1.0, 0.9, -0.3},
                                      build_contour(1.0 / 0.9, 1.0)),
                    WedgeError);
}
