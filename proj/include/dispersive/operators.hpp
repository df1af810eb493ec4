#pragma once

#include "dispersive/field.hpp"

#include <vector>

namespace dispersive {

/// Order of a fractional derivative or power weight; finite and >= 0.
class FracOrder {
public:
    explicit FracOrder(double b);
    double value() const { return b_; }
    bool is_integer() const;
    /// Throws unless b lies strictly inside (0, 1).
    FracOrder require_open_unit(const char* where) const;

private:
    double b_;
};

/// Dyadic index N of a Littlewood-Paley block (|N| <= 60).
class LPBlockIndex {
public:
    explicit LPBlockIndex(int n);
    int value() const { return n_; }

private:
    int n_;
};

/// Multiplier -i sgn(xi), sgn(0) = 0, Nyquist zeroed.
Field hilbert(const Field& f);

/// Multiplier |xi|^b with 0^0 = 1 and 0^b = 0 for b > 0.
Field riesz_deriv(const Field& f, FracOrder b);

/// Bessel potential J^s: multiplier (1 + xi^2)^{s/2}.
Field bessel_potential(const Field& f, double s);

/// Smooth bump on (1/2, 2) whose dyadic dilates sum to one on (0, inf).
double lp_bump(double xi);

/// Q_N: multiplier eta(|xi| / 2^N).
Field lp_block(const Field& f, LPBlockIndex N);

/// Dyadic indices whose blocks can meet the nonzero lattice frequencies.
std::vector<int> lp_block_range(const Grid& grid);

/// Smallest |t| for which the phase exp(i x^2 / 4t) stays at or below the
/// Nyquist frequency over the whole domain: |t| >= L h / (2 pi).
double fractional_gamma_t_min(const Grid& grid);

/// Schrodinger vector field. Integer b applies (x + 2 i t d/dx)^b; other b use
/// exp(i x^2/4t) |2t|^b D^b (exp(-i x^2/4t) f) and need |t| >= t_min.
Field gamma_schrodinger(const Field& f, double t, FracOrder b);

/// Airy vector field x - 3 t d^2/dx^2, which commutes with d/dt + d^3/dx^3.
Field gamma_airy(const Field& f, double t);

/// Benjamin-Ono vector field x - 2 t H d/dx.
Field gamma_bo(const Field& f, double t);

} // namespace dispersive
