#include "dispersive/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dispersive {

Grid::Grid(std::size_t n, double half_length) : n_(n), L_(half_length) {
    if (n < 8 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("grid: n must be a power of two >= 8, got " + std::to_string(n));
    }
    if (!(half_length > 0.0) || !std::isfinite(half_length)) {
        throw std::invalid_argument("grid: L must be positive and finite");
    }
}

Grid Grid::fresnel_matched(std::size_t n, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("grid: Fresnel-matched lattice needs t > 0");
    return Grid(n, std::sqrt(std::numbers::pi * static_cast<double>(n) * t));
}

std::vector<double> Grid::nodes() const {
    std::vector<double> x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = node(j);
    return x;
}

long Grid::wavenumber(std::size_t j) const {
    const auto half = static_cast<long>(n_ / 2);
    const auto jj = static_cast<long>(j);
    return jj < half ? jj : jj - static_cast<long>(n_);
}

double Grid::frequency(std::size_t j) const {
    return std::numbers::pi * static_cast<double>(wavenumber(j)) / L_;
}

std::vector<double> Grid::frequencies() const {
    std::vector<double> xi(n_);
    for (std::size_t j = 0; j < n_; ++j) xi[j] = frequency(j);
    return xi;
}

double Grid::nyquist_frequency() const {
    return std::numbers::pi * static_cast<double>(n_ / 2) / L_;
}

long Grid::dealias_cutoff(double fraction) const {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("grid: dealias fraction must lie in (0, 1]");
    }
    return static_cast<long>(std::floor(fraction * static_cast<double>(n_ / 2) + 1e-12));
}

} // namespace dispersive
