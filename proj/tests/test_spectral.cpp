#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dispersive/corpus.hpp"
#include "dispersive/spectral.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace dispersive;

namespace {

Field random_band_limited(const Grid& g, std::uint64_t seed, long kmax) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    std::vector<cplx> c(g.size(), 0.0);
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (std::labs(g.wavenumber(j)) <= kmax) c[j] = cplx(nd(rng), nd(rng));
    }
    return inverse_transform(SpectralField{g, c});
}

} // namespace

TEST_CASE("grid invariants and rejection") {
    const Grid g(16, 2.0);
    CHECK(g.spacing() == doctest::Approx(0.25));
    CHECK(g.node(0) == -2.0);
    CHECK(g.wavenumber(8) == -8);
    CHECK(g.frequency(1) == doctest::Approx(std::numbers::pi / 2.0));
    for (std::size_t j = 1; j < g.size(); ++j) CHECK(g.node(j) > g.node(j - 1));
    CHECK_THROWS_AS(Grid(12, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid(4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid(16, 0.0), std::invalid_argument);
    CHECK(Grid::fresnel_matched(1024, 0.5).half_length() == doctest::Approx(std::sqrt(std::numbers::pi * 512.0)));
}

TEST_CASE("field rejects non-finite samples") {
    const Grid g(8, 1.0);
    std::vector<cplx> v(8, 1.0);
    v[3] = std::nan("");
    CHECK_THROWS_AS(Field(g, v), std::invalid_argument);
    CHECK_THROWS_AS(Field(g, std::vector<cplx>(7)), std::invalid_argument);
}

TEST_CASE("transform of constant and single harmonic") {
    const Grid g(64, 5.0);
    const auto c1 = transform(Field::constant(g, 1.0)).coeffs;
    CHECK(std::abs(c1[0] - 1.0) < 1e-15);
    for (std::size_t j = 1; j < g.size(); ++j) CHECK(std::abs(c1[j]) < 1e-15);
    const Field e = Field::sample(g, [&](double x) { return std::polar(1.0, std::numbers::pi * x / g.half_length()); });
    const auto c2 = transform(e).coeffs;
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(c2[j] - (j == 1 ? 1.0 : 0.0)) < 1e-14);
}

TEST_CASE("round trip and Parseval over a grid matrix") {
    for (std::size_t n : {8u, 64u, 512u, 2048u}) {
        for (double L : {1.0, 10.0, 40.0}) {
            const Grid g(n, L);
            const Field f = random_band_limited(g, n + static_cast<std::size_t>(L), static_cast<long>(n / 4));
            const Field back = inverse_transform(transform(f));
            CHECK(oracle::rel_l2(back, f) <= 1e-12);
            const double lhs = l2_squared(f);
            CHECK(std::abs(spectral_l2_squared(transform(f)) - lhs) <= 1e-12 * lhs);
        }
    }
}

TEST_CASE("apply_multiplier identity, derivative and direct-sum oracle") {
    const Grid g(128, 8.0);
    const Field f = gaussian(g);
    CHECK(oracle::max_abs_diff(apply_multiplier(f, [](double) { return cplx(1.0); }), f) < 1e-15);

    const double k1 = std::numbers::pi / g.half_length();
    const Field s = Field::sample(g, [&](double x) { return std::sin(k1 * x); });
    const Field ds = apply_multiplier(s, [](double xi) { return cplx(0.0, xi); }, Nyquist::zero);
    const Field expect = Field::sample(g, [&](double x) { return k1 * std::cos(k1 * x); });
    CHECK(oracle::max_abs_diff(ds, expect) < 1e-13);

    auto half = [](double xi) { return cplx(std::sqrt(std::abs(xi))); };
    const Field spectral = apply_multiplier(f, half);
    const Field direct = oracle::direct_multiplier(f, half);
    CHECK(oracle::max_abs_diff(spectral, direct) <= 1e-10);
}

TEST_CASE("apply_multiplier names the offending frequency") {
    const Grid g(16, 1.0);
    const Field f = gaussian(g, 0.2);
    try {
        apply_multiplier(f, [](double xi) { return cplx(1.0 / xi); });
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("xi = 0") != std::string::npos);
    }
}

TEST_CASE("multiplier linearity and composition") {
    const Grid g(256, 12.0);
    const Field f = random_band_limited(g, 7, 60);
    const Field h = random_band_limited(g, 8, 60);
    auto m1 = [](double xi) { return std::polar(1.0, 0.3 * xi * xi) * std::pow(1.0 + xi * xi, 0.25); };
    auto m2 = [](double xi) { return cplx(std::abs(xi), 0.5 * xi); };
    const cplx a(0.7, -1.3);
    const Field lhs = apply_multiplier(f * a + h, m1);
    const Field rhs = apply_multiplier(f, m1) * a + apply_multiplier(h, m1);
    CHECK(oracle::rel_l2(lhs, rhs) <= 1e-12);
    const Field comp = apply_multiplier(apply_multiplier(f, m2), m1);
    const Field prod = apply_multiplier(f, [&](double xi) { return m1(xi) * m2(xi); });
    CHECK(oracle::rel_l2(comp, prod) <= 1e-12);
}

TEST_CASE("odd multipliers keep real input real") {
    const Grid g(64, 4.0);
    std::vector<cplx> v(64);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = (j % 2 == 0) ? 1.0 : -0.5; // strong Nyquist content
    const Field f(g, v);
    CHECK(derivative(f, 1).is_real(1e-14));
    CHECK(derivative(f, 3).is_real(1e-14));
}

TEST_CASE("integrate") {
    CHECK(integrate(Field::constant(Grid(32, 10.0), 1.0)).real() == doctest::Approx(20.0).epsilon(1e-15));
    const Grid g(64, 3.0);
    CHECK(std::abs(integrate(Field::sample(g, [&](double x) { return std::sin(std::numbers::pi * x / 3.0); }))) < 1e-15);
    const Grid g2(512, 20.0);
    CHECK(std::abs(integrate(gaussian(g2)).real() - std::sqrt(std::numbers::pi)) <= 1e-12);
}

TEST_CASE("dealias keeps the low two thirds") {
    const Grid g(64, 5.0);
    CHECK(g.dealias_cutoff(2.0 / 3.0) == 21);
    const Field f = random_band_limited(g, 3, 32);
    const auto c = transform(dealias(f, 2.0 / 3.0)).coeffs;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (std::labs(g.wavenumber(j)) > 21) CHECK(std::abs(c[j]) < 1e-15);
    }
}

TEST_CASE("boundary gate") {
    const Grid g(256, 20.0);
    CHECK(boundary_gate(gaussian(g)).negligible);
    CHECK_FALSE(boundary_gate(gaussian(g, 10.0)).negligible);
}
