#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dispersive/corpus.hpp"
#include "dispersive/propagators.hpp"
#include "dispersive/spectral.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace dispersive;

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

double nls_error(double dt) {
    const Grid g(256, 20.0);
    const EquationSpec spec = EquationSpec::nls(3.0, 1);
    const Field u0 = gaussian(g) * cplx(1.5);
    StepperConfig fine;
    fine.dt = 1e-4;
    const Field ref = evolve(u0, spec, fine, 0.5, {}).snapshots.back();
    StepperConfig cfg;
    cfg.dt = dt;
    return oracle::rel_l2(evolve(u0, spec, cfg, 0.5, {}).snapshots.back(), ref);
}

} // namespace

TEST_CASE("linear symbols") {
    CHECK(linear_symbol(EquationSpec::nls(3.0, 1), 2.0) == cplx(0.0, -4.0));
    CHECK(linear_symbol(EquationSpec::gkdv(1), 2.0) == cplx(0.0, 8.0));
    CHECK(linear_symbol(EquationSpec::bo(), -2.0) == cplx(0.0, 4.0));
}

TEST_CASE("linear group law") {
    const Grid g(256, 16.0);
    const Field f = sample_corpus(make_corpus({.seed = 3, .size = 1}), g).front();
    for (const EquationSpec& spec : {EquationSpec::nls(3.0, 1), EquationSpec::gkdv(2), EquationSpec::bo()}) {
        const Field ab = linear_group(linear_group(f, spec, 0.2), spec, 0.35);
        CHECK(oracle::rel_l2(ab, linear_group(f, spec, 0.55)) < 1e-13);
        CHECK(oracle::rel_l2(linear_group(linear_group(f, spec, 0.4), spec, -0.4), f) < 1e-13);
    }
}

TEST_CASE("spatially constant NLS data follows the phase ODE") {
    // u = c exp(-i mu |c|^{a-1} t) solves i u_t = mu |u|^{a-1} u.
    const Grid g(32, 3.0);
    const cplx c(0.8, 0.6);
    for (double a : {3.0, 5.0, 2.5}) {
        for (int mu : {1, -1}) {
            const EquationSpec spec = EquationSpec::nls(a, mu);
            StepperConfig cfg;
            cfg.dt = 5e-3;
            const Trajectory tr = evolve(Field::constant(g, c), spec, cfg, 2.0, {});
            const cplx exact = c * std::polar(1.0, -mu * std::pow(std::abs(c), a - 1.0) * 2.0);
            for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(tr.snapshots.back()[j] - exact) < 1e-9);
        }
    }
}

TEST_CASE("fourth-order convergence of the stepper") {
    const double e1 = nls_error(0.02);
    const double e2 = nls_error(0.01);
    const double e3 = nls_error(0.005);
    const double o1 = std::log2(e1 / e2);
    const double o2 = std::log2(e2 / e3);
    CHECK(o1 > 3.6);
    CHECK(o2 > 3.6);
    CHECK(o2 < 4.5);
}

TEST_CASE("focusing cubic NLS soliton") {
    // i u_t + u_xx + |u|^2 u = 0 has u = sqrt(2) sech(x) exp(i t).
    const Grid g(512, 30.0);
    const Field u0 = Field::sample(g, [](double x) { return std::sqrt(2.0) * sech(x); });
    StepperConfig cfg;
    cfg.dt = 2e-3;
    const Trajectory tr = evolve(u0, EquationSpec::nls(3.0, -1), cfg, 2.0, {});
    const Field exact = u0 * std::polar(1.0, 2.0);
    CHECK(oracle::max_abs_diff(tr.snapshots.back(), exact) < 1e-6);
}

TEST_CASE("KdV soliton") {
    // u_t + u_xxx + u u_x = 0 has u = 3c sech^2(sqrt(c)(x - ct)/2).
    const double c = 1.0;
    const Grid g(512, 40.0);
    auto sol = [c](double t) {
        return [c, t](double x) { return 3.0 * c * std::pow(sech(0.5 * std::sqrt(c) * (x - c * t + 5.0)), 2); };
    };
    StepperConfig cfg;
    cfg.dt = 1e-3;
    const Trajectory tr = evolve(Field::sample(g, sol(0.0)), EquationSpec::gkdv(1), cfg, 4.0, {});
    CHECK(oracle::max_abs_diff(tr.snapshots.back(), Field::sample(g, sol(4.0))) < 1e-6);
}

TEST_CASE("evolve bookkeeping") {
    const Grid g(128, 16.0);
    const Field u0 = gaussian(g);
    const EquationSpec spec = EquationSpec::nls(3.0, 1);
    const Trajectory zero = evolve(u0, spec, {}, 0.0, {});
    REQUIRE(zero.size() == 1);
    CHECK(oracle::max_abs_diff(zero.snapshots[0], u0) == 0.0);

    const Trajectory tr = evolve(u0, spec, {}, 1.0, uniform_times(1.0, 4));
    REQUIRE(tr.size() == 5);
    CHECK(tr.times.back() == doctest::Approx(1.0));

    const Trajectory snapped = evolve(u0, spec, {}, 1.0, {0.00025, 1.0});
    CHECK(!snapped.warnings.empty());

    StepperConfig bad;
    bad.dt = -1.0;
    CHECK_THROWS_AS(evolve(u0, spec, bad, 1.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(evolve(u0 * cplx(0.0, 1.0), EquationSpec::gkdv(1), {}, 1.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(evolve(u0, spec, {}, 1.0, {2.0}), std::invalid_argument);
}

TEST_CASE("linear-only evolution matches the exact group") {
    const Grid g(256, 20.0);
    const Field u0 = gaussian(g);
    for (const EquationSpec& spec : {EquationSpec::nls(3.0, 1), EquationSpec::gkdv(1), EquationSpec::bo()}) {
        const Trajectory tr = evolve(u0, spec.linear_only(), {}, 0.5, {});
        CHECK(oracle::rel_l2(tr.snapshots.back(), linear_group(u0, spec, 0.5)) < 1e-12);
    }
}

TEST_CASE("NLS time reversal") {
    // If u solves NLS then conj(u(T - t)) does too.
    const Grid g(256, 20.0);
    const Field u0 = sample_corpus(make_corpus({.seed = 9, .size = 1}), g).front();
    const EquationSpec spec = EquationSpec::nls(3.0, 1);
    const Field uT = evolve(u0, spec, {}, 0.5, {}).snapshots.back();
    const Field back = evolve(uT.conj(), spec, {}, 0.5, {}).snapshots.back().conj();
    CHECK(oracle::rel_l2(back, u0) < 1e-9);
}

TEST_CASE("blow-up of the state ends the run with a partial trajectory") {
    const Grid g(128, 10.0);
    StepperConfig cfg;
    cfg.dt = 0.5;
    const Trajectory tr = evolve(gaussian(g) * cplx(200.0), EquationSpec::gkdv(4), cfg, 100.0, uniform_times(100.0, 200));
    CHECK(tr.failed);
    CHECK(tr.failure_time > 0.0);
    CHECK(tr.size() >= 1);
    CHECK(tr.size() < 201);
}
