#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "ptvar/susy.hpp"

using namespace ptvar;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const VariationalParams kGauss{1.0, 0.5, 0.0};
}

TEST_CASE("superpotential of the Gaussian is -t") {
    const Superpotential w = superpotential_from_trial(kGauss);
    REQUIRE(w.terms.size() == 1);
    CHECK_THAT(w.terms[0].coeff, WithinRel(-1.0, 1e-14));
    CHECK_THAT(w.terms[0].power, WithinRel(1.0, 1e-14));
}

TEST_CASE("factorized and partner potentials bracket the harmonic member") {
    const Superpotential w = superpotential_from_trial(kGauss);
    // Factorized form: x^2 - 1, i.e. -t^2 - 1 in t = ix.
    const PowerSumPotential v1 = factorization_potential(w);
    REQUIRE(v1.terms.size() == 2);
    CHECK_THAT(v1.terms[0].coeff, WithinRel(-1.0, 1e-14));
    CHECK(v1.terms[0].power == 0.0);
    CHECK_THAT(v1.terms[1].coeff, WithinRel(-1.0, 1e-14));
    CHECK_THAT(v1.terms[1].power, WithinRel(2.0, 1e-14));
    // Partner: x^2 + 1, i.e. 1 - t^2.
    const PowerSumPotential v2 = partner_potential(w);
    REQUIRE(v2.terms.size() == 2);
    CHECK_THAT(v2.terms[0].coeff, WithinRel(1.0, 1e-14));
    CHECK(v2.terms[0].power == 0.0);
    CHECK_THAT(v2.terms[1].coeff, WithinRel(-1.0, 1e-14));
    CHECK_THAT(v2.terms[1].power, WithinRel(2.0, 1e-14));
}

TEST_CASE("harmonic hierarchy climbs in exact steps of two") {
    const auto h = build_hierarchy(ModelSpec{2.0}, 3);
    REQUIRE(h.size() == 3);
    CHECK(h[0].index == 1);
    CHECK_THAT(excited_energy(h, 0), WithinAbs(1.0, 1e-9));
    CHECK_THAT(excited_energy(h, 1), WithinAbs(3.0, 1e-8));
    CHECK_THAT(excited_energy(h, 2), WithinAbs(5.0, 1e-8));
    for (int lvl = 0; lvl < 3; ++lvl) {
        const VariationalParams& p = excited_params(h, lvl);
        CHECK_THAT(p.alpha, WithinAbs(1.0, 1e-6));
        CHECK_THAT(p.beta, WithinAbs(0.5, 1e-6));
        CHECK_THAT(p.gamma_, WithinAbs(0.0, 1e-6));
    }
    CHECK_THROWS_AS(excited_params(h, 3), NotComputed);
    CHECK_THROWS_AS(excited_energy(h, -1), NotComputed);
    CHECK_THROWS_AS(build_hierarchy(ModelSpec{2.0}, 0), DomainError);
}

TEST_CASE("lowered harmonic states reproduce Hermite functions") {
    const auto h = build_hierarchy(ModelSpec{2.0}, 3);

    // First excited: t exp(t^2/2), node only at the origin.
    const auto wf1 = wavefunction(h, 1);
    const Complex x{0.3, 0.0};
    const Complex t = Complex(0.0, 1.0) * x;
    const Complex expect1 = t * std::exp(0.5 * t * t);
    CHECK_THAT(std::abs(evaluate(wf1, x) - expect1), WithinAbs(0.0, 1e-6));

    // Second excited: (1 + 2 t^2)/4 * exp(t^2/2) given unit envelope scale.
    const auto wf2 = wavefunction(h, 2);
    const Complex expect2 = (1.0 + 2.0 * t * t) / 4.0 * std::exp(0.5 * t * t);
    CHECK_THAT(std::abs(evaluate(wf2, x) - expect2), WithinAbs(0.0, 1e-6));

    // On the negative imaginary axis the prefactors have no zeros.
    CHECK(find_nodes(wf1).empty());
    CHECK(find_nodes(wf2).empty());
}

TEST_CASE("harmonic signed norms alternate with known magnitudes") {
    const auto h = build_hierarchy(ModelSpec{2.0}, 3);
    const double root_pi = std::sqrt(M_PI);
    const auto wf0 = wavefunction(h, 0);
    const auto c0 = build_contour(wf0.base.b(), wf0.base.alpha);
    const Complex n0 = signed_norm(wf0, c0);
    CHECK_THAT(n0.real(), WithinRel(root_pi, 1e-8));
    CHECK_THAT(n0.imag(), WithinAbs(0.0, 1e-10));

    const auto wf1 = wavefunction(h, 1);
    const Complex n1 = signed_norm(wf1, build_contour(wf1.base.b(), wf1.base.alpha));
    CHECK_THAT(n1.real(), WithinRel(-root_pi / 2.0, 1e-6));

    const auto wf2 = wavefunction(h, 2);
    const Complex n2 = signed_norm(wf2, build_contour(wf2.base.b(), wf2.base.alpha));
    CHECK_THAT(n2.real(), WithinRel(root_pi / 8.0, 1e-6));
}

TEST_CASE("signed norm validates the contour shape") {
    const auto h = build_hierarchy(ModelSpec{2.0}, 1);
    const auto wf0 = wavefunction(h, 0);
    CHECK_THROWS_AS(signed_norm(wf0, build_contour(5.0, 1.0)), WedgeError);
}

TEST_CASE("cubic hierarchy reproduces the frozen ladder") {
    const auto h = build_hierarchy(ModelSpec{3.0}, 3);
    CHECK_THAT(excited_energy(h, 0), WithinAbs(1.156754263, 1e-7));
    CHECK_THAT(excited_energy(h, 1), WithinAbs(4.116444, 2e-5));
    CHECK_THAT(excited_energy(h, 2), WithinAbs(7.536250, 5e-5));

    const VariationalParams& p1 = excited_params(h, 1);
    CHECK_THAT(p1.alpha, WithinAbs(0.55745131, 1e-4));
    CHECK_THAT(p1.beta, WithinAbs(0.35677183, 1e-4));
    CHECK_THAT(p1.gamma_, WithinAbs(-0.32812093, 1e-4));

    // First-excited node on the negative imaginary axis.
    const auto wf1 = wavefunction(h, 1);
    const auto nodes = find_nodes(wf1);
    REQUIRE(nodes.size() == 1);
    CHECK_THAT(nodes[0].real(), WithinAbs(0.0, 1e-12));
    CHECK_THAT(-nodes[0].imag(), WithinAbs(0.70239, 1e-3));

    // Ground state has none.
    CHECK(find_nodes(wavefunction(h, 0)).empty());
}

TEST_CASE("quartic hierarchy level matches the frozen solution") {
    const auto h = build_hierarchy(ModelSpec{4.0}, 2);
    CHECK_THAT(excited_energy(h, 1), WithinAbs(6.037928, 2e-5));
    const VariationalParams& p1 = excited_params(h, 1);
    CHECK_THAT(p1.alpha, WithinAbs(0.41676232, 1e-4));
    CHECK_THAT(p1.beta, WithinAbs(0.29152676, 1e-4));
    CHECK_THAT(p1.gamma_, WithinAbs(-0.61476555, 1e-4));
    const auto nodes = find_nodes(wavefunction(h, 1));
    REQUIRE(nodes.size() == 1);
    CHECK_THAT(-nodes[0].imag(), WithinAbs(0.97281, 1e-3));
}

TEST_CASE("node search respects an explicit range") {
    const auto h = build_hierarchy(ModelSpec{3.0}, 2);
    const auto wf1 = wavefunction(h, 1);
    CHECK(find_nodes(wf1, std::make_pair(1e-3, 0.5)).empty());
    CHECK(find_nodes(wf1, std::make_pair(0.5, 1.0)).size() == 1);
    CHECK_THROWS_AS(find_nodes(wf1, std::make_pair(-1.0, 1.0)), DomainError);
}
