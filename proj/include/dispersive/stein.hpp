#pragma once

#include "dispersive/field.hpp"
#include "dispersive/operators.hpp"

#include <functional>
#include <span>
#include <vector>

namespace dispersive {

/// How the sampled field is continued outside [-L, L) when forming the
/// square function (integral of |f(x) - f(y)|^2 / |x - y|^{1+2b} dy)^{1/2}.
enum class SteinExtension {
    /// f = 0 outside the domain; the exterior part of the integral is added in
    /// closed form. This is the whole-line quantity for boundary-negligible f.
    zero,
    /// One periodic image: y ranges over [x - L, x + L] with wrap-around.
    periodic,
};

/// Pointwise Stein derivative at the lattice nodes; nonnegative real output.
/// Midpoint-offset sampling y = x +/- (j + 1/2) h (never y = x) with the
/// |f'(x)|^2 |r|^{1-2b} singular part integrated exactly. b must lie in (0, 1).
Field stein_deriv(const Field& f, FracOrder b, SteinExtension ext = SteinExtension::zero);

/// Whole-line L2 norm of the Stein derivative of the zero-extended field,
/// including the region |x| > L where the square function does not vanish.
double stein_norm(const Field& f, FracOrder b);

/// C(b) with ||stein_deriv f||_2 = C(b) ||D^b f||_2 on the line under the
/// angular frequency convention: C(b)^2 = 2 pi / (Gamma(2b + 1) sin(pi b)).
double stein_riesz_constant(FracOrder b);

/// Stein derivative of a function known in closed form, at arbitrary points.
/// Quadrature step h out to radius R on each side; beyond R the cross term is
/// dropped and (|f(x)|^2 + tail_mean_square) R^{-2b} / b is added.
std::vector<double> stein_deriv_function(const std::function<cplx(double)>& f,
                                         const std::function<cplx(double)>& df, std::span<const double> points,
                                         FracOrder b, double h, double radius, double tail_mean_square);

namespace kernels {

/// Raw inputs of the O(n^2) square-function kernel.
struct SteinInputs {
    std::span<const cplx> at_nodes;   // f(x_i)
    std::span<const cplx> at_midcell; // f(x_i + h/2)
    std::span<const cplx> slope;      // f'(x_i)
    double h = 0.0;
    double half_length = 0.0;
    double b = 0.5;
    SteinExtension extension = SteinExtension::zero;
};

/// Squared square function at every node, OpenMP-parallel over output points.
/// Each point sums in a fixed order, so output is bit-identical for any
/// thread count.
void stein_square_parallel(const SteinInputs& in, std::span<double> out);

/// Straight transcription of the same quadrature, one pair at a time. Kept as
/// the reference the parallel kernel is tested and benchmarked against.
void stein_square_serial(const SteinInputs& in, std::span<double> out);

} // namespace kernels
} // namespace dispersive
