#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dispersive/checks.hpp"
#include "dispersive/corpus.hpp"
#include "dispersive/spectral.hpp"

#include <algorithm>
#include <cmath>

using namespace dispersive;

TEST_CASE("corpus is reproducible and seed dependent") {
    const auto a = make_corpus({});
    const auto b = make_corpus({});
    const auto c = make_corpus({.seed = 1});
    REQUIRE(a.size() == default_corpus_size);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].sigma == b[i].sigma);
        CHECK(a[i].poly[3] == b[i].poly[3]);
    }
    CHECK(a[0].sigma != c[0].sigma);
    for (const auto& m : a) {
        CHECK(m.sigma >= 0.7);
        CHECK(m.sigma <= 1.5);
        CHECK(std::abs(m.center) <= 1.0);
        CHECK(std::abs(m.kappa) <= 2.0);
    }
}

TEST_CASE("corpus sampling and gate") {
    const Grid g(512, 16.0);
    const auto fields = sample_corpus(make_corpus({.real_valued = true}), g);
    for (const auto& f : fields) CHECK(f.is_real(0.0));
    const auto m = make_corpus({.size = 1}).front();
    // Sampling at scale 2 is sampling the member at 2x.
    const Field s = m.sample(g, 2.0);
    CHECK(std::abs(s[300] - m(2.0 * g.node(300))) == 0.0);
    CHECK_THROWS_AS(sample_corpus(make_corpus({}), Grid(512, 2.0)), std::invalid_argument);
}

TEST_CASE("registry") {
    const auto names = check_names();
    CHECK(names.size() == 19);
    CHECK(std::find(names.begin(), names.end(), "persistence") != names.end());
    CHECK_THROWS_AS(run_check({.id = "nope"}), std::invalid_argument);
    CHECK_THROWS_AS(run_check({.id = "gamma_identity", .params = {{"tt", 1.0}}}), std::invalid_argument);
    const auto out = run_check({.id = "gamma_identity", .params = {{"b", 0.25}}});
    REQUIRE(out.reports.size() == 1);
    CHECK(out.reports[0].param("b") == 0.25);
    CHECK(out.reports[0].passed());
}

TEST_CASE("gamma identity at integer and fractional orders") {
    for (double t : {0.25, 0.5, 1.0}) {
        const CheckReport r = check_gamma_identity(t, 1.0);
        CHECK(r.residual_max <= 1e-10);
    }
    for (double b : {0.25, 0.5, 0.75}) CHECK(check_gamma_identity(0.5, b).residual_max <= 1e-6);
}

TEST_CASE("chirp Stein bound is invariant under t -> 4t") {
    // stein(e^{i 4t x^2})(x) = 2^b stein(e^{it y^2})(2x), and the bound
    // t^{b/2} + t^b |x|^b transforms the same way. Doubling L with n fixed
    // maps the lattice, the fit window and the quadrature radius onto each
    // other, so the fitted constants must agree to rounding.
    const CheckReport a = check_chirp_stein(0.25, 0.5, 1024, 24.0);
    const CheckReport b = check_chirp_stein(1.0, 0.5, 1024, 12.0);
    CHECK(a.passed());
    CHECK(b.passed());
    CHECK(a.fitted_constant == doctest::Approx(b.fitted_constant).epsilon(1e-10));
}

TEST_CASE("chirp Stein near the top of the order range") {
    const CheckReport r = check_chirp_stein(0.25, 0.9);
    CHECK(r.passed());
    CHECK(std::isfinite(r.fitted_constant));
    CHECK(r.fitted_constant > 0.0);
}

TEST_CASE("chirp resolvability is enforced") {
    CHECK_THROWS_AS(check_chirp_stein(10.0, 0.5), std::invalid_argument);
}

TEST_CASE("inequality checks report exact degenerate cases") {
    for (const CheckReport& r : {check_leibniz(0.5, 3), check_gn(0.5, 1.0, 2.0, 2.0, 2.0),
                                 check_interpolation(1.0, 1.0, 0.5), check_commutator_leibniz(0.5, 2.0, 3),
                                 check_commutator_hilbert(1, 0, 2.0), check_weighted_free(0.5, 0.5)}) {
        INFO(r.check_id);
        CHECK(r.passed());
        CHECK(r.residual_max <= 1e-8);
        CHECK(std::isfinite(r.worst_ratio));
        CHECK(r.worst_ratio > 0.0);
    }
}

TEST_CASE("unweighted A_p is exactly one") {
    const CheckReport r = check_ap_hilbert(0.0, 2.0, 128, 2);
    CHECK(r.fitted_constant == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.passed());
}

TEST_CASE("scaling of the critical norm") {
    for (double a : {5.0, 7.0}) CHECK(check_scaling(a).residual_max <= 1e-10);
    CHECK_THROWS_AS(check_scaling(3.0), std::invalid_argument);
}

TEST_CASE("persistence records its diagnostics") {
    PersistenceSetup setup;
    setup.spec = EquationSpec::nls(3.0, 1);
    setup.s = 1.0;
    setup.m = 1.0;
    setup.T = 0.2;
    setup.snapshots = 4;
    const Grid g(512, 40.0);
    const PersistenceResult res = persistence_experiment(setup, gaussian(g, 2.0));
    CHECK(res.trajectory.size() == 5);
    CHECK(res.trajectory.diagnostic("weighted_m_norm").size() == 5);
    CHECK(res.report.verdict == Verdict::pass);
    setup.m = 2.0;
    CHECK(persistence_experiment(setup, gaussian(g, 2.0)).report.verdict == Verdict::report_only);
}
