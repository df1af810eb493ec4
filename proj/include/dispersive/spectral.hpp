#pragma once

#include "dispersive/field.hpp"

#include <functional>
#include <vector>

namespace dispersive {

/// Frequency-domain symbol m(xi) evaluated on the lattice frequencies.
using Symbol = std::function<cplx(double)>;

/// Treatment of the single Nyquist slot. Symbols that are not even in xi
/// (sgn, i xi, odd-phase groups) must zero it or real input stops mapping to
/// real output.
enum class Nyquist { keep, zero };

SpectralField transform(const Field& f);
Field inverse_transform(const SpectralField& s);

/// inverse_transform(m(xi_k) * transform(f)_k). Throws if m is non-finite at
/// any lattice frequency, naming the frequency.
Field apply_multiplier(const Field& f, const Symbol& m, Nyquist nyquist = Nyquist::keep);

/// Same contract with the symbol pre-evaluated in FFT slot order.
Field apply_symbol_table(const Field& f, const std::vector<cplx>& table, Nyquist nyquist = Nyquist::keep);

/// Trapezoid rule h * sum_j f(x_j); spectrally accurate for smooth periodic integrands.
cplx integrate(const Field& f);

/// h * sum_j |f(x_j)|^2, i.e. the squared discrete L2 norm.
double l2_squared(const Field& f);

/// 2L * sum_k |c_k|^2; equals l2_squared(f) by Parseval.
double spectral_l2_squared(const SpectralField& s);

/// (i xi)^order; odd orders zero the Nyquist slot.
Field derivative(const Field& f, int order = 1);

/// Keeps |k| <= fraction * n/2 and zeroes the rest.
Field dealias(const Field& f, double fraction);

struct BoundaryGate {
    bool negligible = true;
    double edge_max = 0.0;
    double field_max = 0.0;
};

/// max|f| over the outer tenth of the domain (|x| >= 0.9 L) against
/// threshold * max|f|.
BoundaryGate boundary_gate(const Field& f, double threshold = 1e-10);

} // namespace dispersive
