#include "dispersive/operators.hpp"

#include "dispersive/spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dispersive {

FracOrder::FracOrder(double b) : b_(b) {
    if (!std::isfinite(b) || b < 0.0) throw std::invalid_argument("fractional order must be finite and >= 0");
}

bool FracOrder::is_integer() const { return b_ == std::floor(b_); }

FracOrder FracOrder::require_open_unit(const char* where) const {
    if (!(b_ > 0.0 && b_ < 1.0)) {
        std::ostringstream msg;
        msg << where << ": order b must lie in (0, 1), got " << b_;
        throw std::invalid_argument(msg.str());
    }
    return *this;
}

LPBlockIndex::LPBlockIndex(int n) : n_(n) {
    if (n < -60 || n > 60) throw std::invalid_argument("Littlewood-Paley index must satisfy |N| <= 60");
}

Field hilbert(const Field& f) {
    return apply_multiplier(
        f, [](double xi) { return cplx(0.0, xi > 0.0 ? -1.0 : (xi < 0.0 ? 1.0 : 0.0)); }, Nyquist::zero);
}

Field riesz_deriv(const Field& f, FracOrder b) {
    const double p = b.value();
    if (p == 0.0) return f;
    return apply_multiplier(f, [p](double xi) { return cplx(xi == 0.0 ? 0.0 : std::pow(std::abs(xi), p)); });
}

Field bessel_potential(const Field& f, double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("bessel_potential: s must be finite");
    if (s == 0.0) return f;
    return apply_multiplier(f, [s](double xi) { return cplx(std::pow(1.0 + xi * xi, 0.5 * s)); });
}

namespace {

// Smooth step: 0 for x <= 0, 1 for x >= 1, built from exp(-1/x).
double smooth_step(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / x);
    const double b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
}

} // namespace

double lp_bump(double xi) {
    if (xi <= 0.0) return 0.0;
    const double s = std::log2(xi);
    return smooth_step(s + 1.0) - smooth_step(s);
}

Field lp_block(const Field& f, LPBlockIndex N) {
    const double scale = std::ldexp(1.0, -N.value());
    return apply_multiplier(f, [scale](double xi) { return cplx(lp_bump(std::abs(xi) * scale)); });
}

std::vector<int> lp_block_range(const Grid& grid) {
    const double xi_min = std::numbers::pi / grid.half_length();
    const double xi_max = grid.nyquist_frequency();
    const int lo = static_cast<int>(std::floor(std::log2(xi_min))) - 1;
    const int hi = static_cast<int>(std::ceil(std::log2(xi_max))) + 1;
    std::vector<int> out;
    for (int N = lo; N <= hi; ++N) out.push_back(N);
    return out;
}

double fractional_gamma_t_min(const Grid& grid) {
    return grid.half_length() * grid.spacing() / (2.0 * std::numbers::pi);
}

namespace {

Field gamma_schrodinger_integer_once(const Field& f, double t) {
    return f.times_x() + derivative(f, 1) * cplx(0.0, 2.0 * t);
}

} // namespace

Field gamma_schrodinger(const Field& f, double t, FracOrder b) {
    const double order = b.value();
    if (order == 0.0) return f;
    if (b.is_integer()) {
        Field out = f;
        for (int r = 0; r < static_cast<int>(order); ++r) out = gamma_schrodinger_integer_once(out, t);
        return out;
    }
    const Grid& g = f.grid();
    const double t_min = fractional_gamma_t_min(g);
    // Relative slack so a lattice built by Grid::fresnel_matched(n, t) is accepted.
    if (!(std::abs(t) >= t_min * (1.0 - 1e-12))) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "gamma_schrodinger: |t| = " << std::abs(t) << " is below t_min = " << t_min
            << " (phase exp(i x^2/4t) exceeds the lattice Nyquist frequency)";
        throw std::invalid_argument(msg.str());
    }
    const Field phase = Field::sample(g, [t](double x) { return std::polar(1.0, x * x / (4.0 * t)); });
    const Field inner = f.times(phase.conj());
    const Field d = riesz_deriv(inner, b);
    return d.times(phase) * cplx(std::pow(std::abs(2.0 * t), order));
}

Field gamma_airy(const Field& f, double t) {
    return f.times_x() - derivative(f, 2) * cplx(3.0 * t);
}

Field gamma_bo(const Field& f, double t) {
    return f.times_x() - hilbert(derivative(f, 1)) * cplx(2.0 * t);
}

} // namespace dispersive
