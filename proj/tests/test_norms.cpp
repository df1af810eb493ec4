#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dispersive/corpus.hpp"
#include "dispersive/norms.hpp"
#include "dispersive/propagators.hpp"
#include "dispersive/spectral.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace dispersive;

namespace {

const double root_half_pi = std::sqrt(0.5 * std::numbers::pi); // int exp(-2x^2)

} // namespace

TEST_CASE("weighted norms of a Gaussian") {
    const Grid g(1024, 16.0);
    const Field f = gaussian(g);
    CHECK(weighted_l2(f, 0.0) == doctest::Approx(std::sqrt(root_half_pi)).epsilon(1e-12));
    // int x^2 exp(-2x^2) = sqrt(pi/2) / 4, int x^4 exp(-2x^2) = 3 sqrt(pi/2) / 16.
    CHECK(weighted_l2(f, 1.0) == doctest::Approx(std::sqrt(root_half_pi / 4.0)).epsilon(1e-12));
    CHECK(weighted_l2(f, 2.0) == doctest::Approx(std::sqrt(3.0 * root_half_pi / 16.0)).epsilon(1e-12));
    CHECK(weighted_l2(f, 1.0, WeightKind::bracket) == doctest::Approx(std::sqrt(1.25 * root_half_pi)).epsilon(1e-12));
    for (double m : {0.25, 0.5, 1.5}) CHECK(weighted_l2(f, m) == doctest::Approx(weighted_l2_measure(f, 2.0 * m)));
    CHECK_THROWS_AS(weighted_l2(f, -1.0), std::invalid_argument);
}

TEST_CASE("sobolev and lebesgue norms of a Gaussian") {
    const Grid g(1024, 16.0);
    const Field f = gaussian(g);
    CHECK(sobolev(f, 0.0) == doctest::Approx(std::sqrt(root_half_pi)).epsilon(1e-12));
    // int |f'|^2 = int 4x^2 exp(-2x^2) = sqrt(pi/2).
    CHECK(sobolev(f, 1.0) == doctest::Approx(std::sqrt(2.0 * root_half_pi)).epsilon(1e-12));
    CHECK(lebesgue(f, 1.0) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
    CHECK(lebesgue(f, 2.0) == doctest::Approx(sobolev(f, 0.0)).epsilon(1e-14));
    CHECK(lebesgue(f, INFINITY) == doctest::Approx(1.0));
    const std::vector<double> ones(g.size(), 1.0);
    CHECK(weighted_lebesgue(f, ones, 3.0) == doctest::Approx(lebesgue(f, 3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(lebesgue(f, 0.5), std::invalid_argument);
}

TEST_CASE("mixed norms") {
    const Grid g(512, 20.0);
    const EquationSpec spec = EquationSpec::nls(3.0, 1).linear_only();
    const Trajectory traj = evolve(gaussian(g), spec, {}, 1.0, uniform_times(1.0, 40));
    auto id = [](double) { return cplx(1.0); };
    for (double p : {2.0, 4.0}) {
        const double a = mixed_norm(traj, p, p, MixedOrder::space_then_time, id);
        const double b = mixed_norm(traj, p, p, MixedOrder::time_then_space, id);
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
    // Mass is conserved: the L^inf_t L^2_x norm equals the initial L2 norm.
    CHECK(mixed_norm(traj, 2.0, INFINITY, MixedOrder::space_then_time, id) ==
          doctest::Approx(std::sqrt(root_half_pi)).epsilon(1e-12));
    // L^2_t L^2_x over [0, 1] of a conserved L2 norm.
    CHECK(mixed_norm(traj, 2.0, 2.0, MixedOrder::space_then_time, id) ==
          doctest::Approx(std::sqrt(root_half_pi)).epsilon(1e-12));
    const Trajectory single = evolve(gaussian(g), spec, {}, 0.0, {});
    CHECK(single.size() == 1);
    CHECK(mixed_norm(single, 2.0, 2.0, MixedOrder::space_then_time, id) ==
          doctest::Approx(std::sqrt(root_half_pi)).epsilon(1e-12));
}

TEST_CASE("power weight sampling") {
    const Grid g(64, 4.0);
    const auto w = power_weight(g, 0.5);
    CHECK(w[32] == doctest::Approx(std::sqrt(0.5 * g.spacing())));
    CHECK(w[40] == doctest::Approx(std::sqrt(std::abs(g.node(40)))));
    for (double v : power_weight(g, 0.0)) CHECK(v == 1.0);
}

TEST_CASE("A_p constant basics") {
    const std::vector<double> flat(128, 3.0);
    CHECK(ap_constant(flat, 2.0).value == doctest::Approx(1.0).epsilon(1e-14));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> w(256);
        for (auto& v : w) v = u(rng);
        for (double p : {1.5, 2.0, 3.0}) {
            const ApResult base = ap_constant(w, p);
            CHECK(base.value >= 1.0);
            std::vector<double> scaled(w);
            for (auto& v : scaled) v *= 7.5;
            CHECK(ap_constant(scaled, p).value == doctest::Approx(base.value).epsilon(1e-12));
            const ApResult serial = kernels::ap_constant_serial(w, p);
            CHECK(serial.value == doctest::Approx(base.value).epsilon(1e-12));
            CHECK(serial.first == base.first);
            CHECK(serial.count == base.count);
        }
    }
    CHECK_THROWS_AS(ap_constant(flat, 1.0), std::invalid_argument);
    std::vector<double> bad(flat);
    bad[3] = 0.0;
    CHECK_THROWS_AS(ap_constant(bad, 2.0), std::invalid_argument);
}

TEST_CASE("A_2 of a two-level weight") {
    // Weight 1 on the left half and c on the right: the whole-domain block gives
    // ((1 + c)/2)((1 + 1/c)/2); every smaller dyadic block is constant.
    const double c = 9.0;
    std::vector<double> w(64, 1.0);
    for (std::size_t j = 32; j < 64; ++j) w[j] = c;
    const ApResult r = ap_constant(w, 2.0);
    CHECK(r.value == doctest::Approx(0.25 * (1.0 + c) * (1.0 + 1.0 / c)));
    CHECK(r.count == 64);
}
