#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "ptvar/closedform.hpp"

using namespace ptvar;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
std::complex<double> axis_moment(const VariationalParams& p, double power) {
    return std::exp(std::complex<double>(0.0, -M_PI * power / 2.0)) * moment(p, power);
}
}  // namespace

TEST_CASE("harmonic member reproduces Gaussian expectation values") {
    const VariationalParams g{1.0, 0.5, 0.0};
    CHECK_THAT(moment(g, 0.0), WithinRel(1.0, 1e-14));
    // <(ix)^2> = -<x^2> = -1/2 for exp(-x^2/2).
    CHECK_THAT(moment(g, 2.0), WithinRel(-0.5, 1e-13));
    const auto x2 = axis_moment(g, 2.0);
    CHECK_THAT(x2.real(), WithinRel(0.5, 1e-13));
    CHECK_THAT(x2.imag(), WithinAbs(0.0, 1e-13));
    CHECK_THAT(kinetic(g), WithinRel(0.5, 1e-13));
    CHECK_THAT(energy_functional(ModelSpec{2.0}, g), WithinRel(1.0, 1e-13));
}

TEST_CASE("alpha elimination is exact for the harmonic member") {
    const ModelSpec m{2.0};
    CHECK_THAT(solve_alpha(m, 0.5, 0.0), WithinRel(1.0, 1e-12));
    CHECK_THAT(reduced_energy(m, 0.5, 0.0), WithinRel(1.0, 1e-12));
}

TEST_CASE("reduced energy reproduces the reference optima") {
    CHECK_THAT(reduced_energy(ModelSpec{3.0}, 0.3855, -0.1570),
               WithinAbs(1.156754, 2e-5));
    CHECK_THAT(reduced_energy(ModelSpec{4.0}, 0.3185, -0.2745),
               WithinAbs(1.478023, 2e-5));
    CHECK_THAT(reduced_energy(ModelSpec{5.0}, 0.2720, -0.3610),
               WithinAbs(1.909382, 2e-5));
}

TEST_CASE("reduced energy equals the functional at the eliminated alpha") {
    const ModelSpec m{3.0};
    const double be = 0.39, ga = -0.21;
    const double al = solve_alpha(m, be, ga);
    CHECK_THAT(reduced_energy(m, be, ga),
               WithinRel(energy_functional(m, {al, be, ga}), 1e-12));
    // Stationarity in alpha: symmetric perturbations only lower the value.
    const double e0 = energy_functional(m, {al, be, ga});
    const double ep = energy_functional(m, {al * (1.0 + 1e-5), be, ga});
    const double em = energy_functional(m, {al * (1.0 - 1e-5), be, ga});
    CHECK(std::abs(ep - e0) < 1e-8);
    CHECK(std::abs(em - e0) < 1e-8);
}

TEST_CASE("infeasible points are rejected by alpha elimination") {
    const ModelSpec m{3.0};
    CHECK_THROWS_AS(solve_alpha(m, 0.4, -0.62), InfeasibleError);
    CHECK_THROWS_AS(reduced_energy(m, 0.4, -0.62), InfeasibleError);
}

TEST_CASE("general power sums extend the single-power functional") {
    const ModelSpec m{3.0};
    const VariationalParams p{0.7207, 0.3855, -0.1570};
    const double base = energy_functional(m, p);
    CHECK_THAT(generalized_energy(PowerSumPotential::single_power(3.0), p),
               WithinRel(base, 1e-12));
    // A constant term shifts the energy by exactly that constant.
    const PowerSumPotential shifted({{-1.0, 3.0}, {-5.0, 0.0}});
    CHECK_THAT(generalized_energy(shifted, p), WithinRel(base - 5.0, 1e-12));
    // Contour shape must fit the dominant power's decay wedges.
    CHECK_THROWS_AS(generalized_energy(PowerSumPotential::single_power(3.0),
                                       VariationalParams{1.0, 0.9, -0.3}),
                    WedgeError);
}

TEST_CASE("moment poles follow the gamma-ratio conventions") {
    // Denominator pole: the moment vanishes by analytic continuation.
    const VariationalParams p{1.0, 0.25, 0.25};
    CHECK(moment(p, 2.0) == 0.0);
    // Numerator pole: no finite value exists.
    const VariationalParams q{1.0, 0.25, 0.75};
    CHECK_THROWS_AS(moment(q, 2.0), PoleError);
}
