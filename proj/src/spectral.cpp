#include "dispersive/spectral.hpp"

#include "dispersive/fft.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dispersive {
namespace {

double parity_sign(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

} // namespace

SpectralField transform(const Field& f) {
    const Grid& g = f.grid();
    const std::size_t n = g.size();
    std::vector<cplx> c(n);
    fft::forward(f.values(), c);
    const double inv_n = 1.0 / static_cast<double>(n);
    // exp(-i xi_k x_j) = (-1)^k exp(-2 pi i j k / n) because x_0 = -L.
    for (std::size_t j = 0; j < n; ++j) c[j] *= parity_sign(g.wavenumber(j)) * inv_n;
    return SpectralField{g, std::move(c)};
}

Field inverse_transform(const SpectralField& s) {
    const std::size_t n = s.grid.size();
    if (s.coeffs.size() != n) throw std::invalid_argument("inverse_transform: coefficient count mismatch");
    std::vector<cplx> c(s.coeffs);
    for (std::size_t j = 0; j < n; ++j) c[j] *= parity_sign(s.grid.wavenumber(j));
    std::vector<cplx> v(n);
    fft::backward(c, v);
    return Field(s.grid, std::move(v));
}

Field apply_symbol_table(const Field& f, const std::vector<cplx>& table, Nyquist nyquist) {
    const Grid& g = f.grid();
    const std::size_t n = g.size();
    if (table.size() != n) throw std::invalid_argument("apply_multiplier: symbol table length mismatch");
    std::vector<cplx> c(n);
    fft::forward(f.values(), c);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx m = table[j];
        if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "apply_multiplier: symbol is not finite at xi = " << g.frequency(j) << " (k = " << g.wavenumber(j)
                << ")";
            throw std::invalid_argument(msg.str());
        }
        c[j] *= m * inv_n;
    }
    if (nyquist == Nyquist::zero) c[g.nyquist_slot()] = 0.0;
    std::vector<cplx> v(n);
    fft::backward(c, v);
    return Field(g, std::move(v));
}

Field apply_multiplier(const Field& f, const Symbol& m, Nyquist nyquist) {
    const Grid& g = f.grid();
    std::vector<cplx> table(g.size());
    for (std::size_t j = 0; j < table.size(); ++j) table[j] = m(g.frequency(j));
    return apply_symbol_table(f, table, nyquist);
}

cplx integrate(const Field& f) {
    cplx sum = 0.0;
    for (const auto& z : f.values()) sum += z;
    return sum * f.grid().spacing();
}

double l2_squared(const Field& f) {
    double sum = 0.0;
    for (const auto& z : f.values()) sum += std::norm(z);
    return sum * f.grid().spacing();
}

double spectral_l2_squared(const SpectralField& s) {
    double sum = 0.0;
    for (const auto& c : s.coeffs) sum += std::norm(c);
    return sum * s.grid.length();
}

Field derivative(const Field& f, int order) {
    if (order < 0) throw std::invalid_argument("derivative: order must be non-negative");
    if (order == 0) return f;
    const cplx i(0.0, 1.0);
    return apply_multiplier(f, [&](double xi) { return std::pow(i * xi, order); },
                            order % 2 == 1 ? Nyquist::zero : Nyquist::keep);
}

Field dealias(const Field& f, double fraction) {
    const Grid& g = f.grid();
    const long cutoff = g.dealias_cutoff(fraction);
    std::vector<cplx> table(g.size());
    for (std::size_t j = 0; j < table.size(); ++j) table[j] = std::labs(g.wavenumber(j)) <= cutoff ? 1.0 : 0.0;
    return apply_symbol_table(f, table);
}

BoundaryGate boundary_gate(const Field& f, double threshold) {
    BoundaryGate gate;
    const Grid& g = f.grid();
    const double edge = 0.9 * g.half_length();
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double a = std::abs(f[j]);
        gate.field_max = std::max(gate.field_max, a);
        if (std::abs(g.node(j)) >= edge) gate.edge_max = std::max(gate.edge_max, a);
    }
    gate.negligible = gate.edge_max <= threshold * gate.field_max;
    return gate;
}

} // namespace dispersive
