#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "ptvar/ode_oracle.hpp"

using namespace ptvar;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("shooting start radius reaches the requested decay exponent") {
    const ModelSpec m{2.0};
    const double r = oracle_r_start(m, 30.0);
    // WKB exponent 2 r^{(N+2)/2} / (N+2) evaluates back to the target.
    CHECK_THAT(2.0 * std::pow(r, 2.0) / 4.0, WithinRel(30.0, 1e-12));
    const ShootingConfig cfg = default_shooting_config(m);
    CHECK(cfg.steps == 20000);
    CHECK(cfg.match_point == 0.0);
}

TEST_CASE("shooting configuration is validated") {
    const ModelSpec m{3.0};
    ShootingConfig cfg = default_shooting_config(m);
    cfg.steps = 19999;
    CHECK_THROWS_AS(shoot(m, 1.0, cfg), StepError);
    cfg.steps = 98;
    CHECK_THROWS_AS(shoot(m, 1.0, cfg), StepError);
    cfg = default_shooting_config(m);
    cfg.r_start = 1.0;  // decay exponent far below the required 25
    CHECK_THROWS_AS(shoot(m, 1.0, cfg), DomainError);
    cfg = default_shooting_config(m);
    cfg.match_point = 0.5;
    CHECK_THROWS_AS(shoot(m, 1.0, cfg), DomainError);
}

TEST_CASE("harmonic eigenvalues come out to nine digits") {
    const ModelSpec m{2.0};
    const ShootingConfig cfg = default_shooting_config(m);
    const auto roots = scan(m, 9.6, cfg);
    REQUIRE(roots.size() == 5);
    for (int k = 0; k < 5; ++k)
        CHECK_THAT(roots[static_cast<std::size_t>(k)],
                   WithinAbs(2.0 * k + 1.0, 1e-9));
}

TEST_CASE("mismatch changes sign across an eigenvalue") {
    const ModelSpec m{2.0};
    const ShootingConfig cfg = default_shooting_config(m);
    const double below = shoot(m, 0.9, cfg).real();
    const double above = shoot(m, 1.1, cfg).real();
    CHECK(below * above < 0.0);
    CHECK_THAT(eigenvalue(m, {0.9, 1.1}, cfg), WithinAbs(1.0, 1e-9));
    CHECK_THROWS_AS(eigenvalue(m, {1.8, 2.2}, cfg), NoRootInBracket);
}

TEST_CASE("cubic ground energy matches the frozen eigenvalue") {
    const ModelSpec m{3.0};
    const ShootingConfig cfg = default_shooting_config(m);
    CHECK_THAT(eigenvalue(m, {1.0, 1.25}, cfg), WithinAbs(1.156267072, 1e-7));
}

TEST_CASE("matched eigenfunction is smooth, normalizable, and nodeless") {
    const ModelSpec m{3.0};
    const ShootingConfig cfg = default_shooting_config(m);
    const double e0 = eigenvalue(m, {1.0, 1.25}, cfg);
    const EigenSolution s = eigenfunction(m, e0, cfg);
    CHECK_THAT(s.energy, WithinAbs(e0, 1e-12));
    CHECK(std::abs(s.mismatch) < 1e-6);
    CHECK(s.samples.size() == 2u * (static_cast<std::size_t>(cfg.steps) + 1u));
    CHECK(std::abs(s.psi_origin) > 0.0);
    CHECK(s.node_list.empty());
    // PT symmetry pins the matched state: psi(0) is real up to roundoff
    // after phase fixing.
    CHECK(std::abs(s.psi_origin.imag()) < 1e-8 * std::abs(s.psi_origin));
    CHECK_THROWS_AS(eigenfunction(m, e0 + 0.05, cfg), DomainError);
}

TEST_CASE("excited exact state carries one axis node") {
    const ModelSpec m{3.0};
    const ShootingConfig cfg = default_shooting_config(m);
    const double e1 = eigenvalue(m, {4.0, 4.25}, cfg);
    CHECK_THAT(e1, WithinAbs(4.109228753, 1e-7));
    const EigenSolution s = eigenfunction(m, e1, cfg);
    REQUIRE(s.node_list.size() == 1);
    CHECK_THAT(-s.node_list[0].imag(), WithinAbs(0.661296, 1e-5));
}

TEST_CASE("even-parity states defeat the normalized matching residual") {
    // At a symmetric eigenvalue both Wronskian products vanish at the
    // origin, so the normalized mismatch tends to +-1 rather than 0 and the
    // gate rejects the state. Eigenvalues themselves are unaffected: the
    // scan locks onto the sign flip.
    const ModelSpec m{2.0};
    const ShootingConfig cfg = default_shooting_config(m);
    const double e0 = eigenvalue(m, {0.9, 1.1}, cfg);
    CHECK_THAT(e0, WithinAbs(1.0, 1e-9));
    CHECK_THROWS_AS(eigenfunction(m, e0, cfg), DomainError);
}

TEST_CASE("quartic exact moments match the frozen values") {
    const ModelSpec m{4.0};
    const ShootingConfig cfg = default_shooting_config(m);
    const EigenSolution s = eigenfunction(m, eigenvalue(m, {1.4, 1.5}, cfg), cfg);
    CHECK_THAT(s.energy, WithinAbs(1.477149754, 1e-7));
    CHECK(s.node_list.empty());
    const Complex m1 = exact_moment(m, s, 1.0);
    CHECK_THAT(m1.imag(), WithinAbs(-0.866858160, 1e-6));
    CHECK(std::abs(m1.real()) < 1e-6);
    const Complex m0 = exact_moment(m, s, 0.0);
    CHECK_THAT(m0.real(), WithinAbs(1.0, 1e-10));
    CHECK_THAT(m0.imag(), WithinAbs(0.0, 1e-10));
}

TEST_CASE("cubic exact first moment matches the frozen value") {
    const ModelSpec m{3.0};
    const ShootingConfig cfg = default_shooting_config(m);
    const EigenSolution s = eigenfunction(m, eigenvalue(m, {1.0, 1.25}, cfg), cfg);
    const Complex m1 = exact_moment(m, s, 1.0);
    CHECK_THAT(m1.imag(), WithinAbs(-0.590072533, 1e-6));
    CHECK(std::abs(m1.real()) < 1e-6);
}

TEST_CASE("distinct exact states are orthogonal under the signed product") {
    const ModelSpec m{3.0};
    const ShootingConfig cfg = default_shooting_config(m);
    const EigenSolution s0 = eigenfunction(m, eigenvalue(m, {1.0, 1.25}, cfg), cfg);
    const EigenSolution s1 = eigenfunction(m, eigenvalue(m, {4.0, 4.25}, cfg), cfg);
    CHECK(std::abs(orthogonality(s0, s1)) < 1e-6);
    // Self-overlap normalizes to magnitude one.
    CHECK_THAT(std::abs(orthogonality(s0, s0)), WithinRel(1.0, 1e-9));
}
