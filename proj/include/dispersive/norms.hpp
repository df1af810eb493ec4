#pragma once

#include "dispersive/equation.hpp"
#include "dispersive/field.hpp"
#include "dispersive/spectral.hpp"

#include <span>
#include <vector>

namespace dispersive {

enum class WeightKind {
    power,   // |x|^m
    bracket, // <x>^m = (1 + x^2)^{m/2}
};

/// (integral |x|^{2m} |f|^2)^{1/2}, or with <x>^{2m}. m >= 0. The weight is
/// sampled at the lattice nodes, so 0^0 = 1 at the origin node.
double weighted_l2(const Field& f, double m, WeightKind kind = WeightKind::power);

/// (integral |f|^2 |x|^q dx)^{1/2}: the norm of L^2(|x|^q dx) with the measure
/// exponent stated directly. weighted_l2(f, m) == weighted_l2_measure(f, 2m).
double weighted_l2_measure(const Field& f, double q);

/// ||J^s f||_2.
double sobolev(const Field& f, double s);

/// (integral |f|^p)^{1/p} for p in [1, inf); p = inf gives max |f(x_j)|.
double lebesgue(const Field& f, double p);

/// (h sum_j w_j |f_j|^p)^{1/p} for a positive sampled weight.
double weighted_lebesgue(const Field& f, std::span<const double> w, double p);

enum class MixedOrder {
    space_then_time, // || ||u(t)||_{L^px} ||_{L^qt}
    time_then_space, // || ||u(x, .)||_{L^qt} ||_{L^px}
};

/// Space-time norm of m(D) u over the trajectory. Time integrals use the
/// trapezoid rule on the (equally spaced) snapshots; q_t = inf takes the max.
/// A single-snapshot trajectory has no time extent and returns the spatial
/// norm of that snapshot.
double mixed_norm(const Trajectory& traj, double p_x, double q_t, MixedOrder order, const Symbol& deriv,
                  Nyquist nyquist = Nyquist::keep);

/// Lattice sample of |x|^alpha. The origin node, where the weight vanishes or
/// blows up, is given the value (h/2)^alpha, the weight at the nearest
/// half-cell point.
std::vector<double> power_weight(const Grid& grid, double alpha);

struct ApResult {
    double value = 1.0;
    /// Maximizing dyadic interval [x_first, x_first + count h).
    std::size_t first = 0;
    std::size_t count = 0;
};

/// Dyadic A_p constant: sup over dyadic node blocks Q of 2..n nodes of
/// (avg_Q w)(avg_Q w^{1-p'})^{p-1}. Requires w > 0 and p in (1, inf).
ApResult ap_constant(std::span<const double> w, double p);

namespace kernels {

/// Prefix-sum evaluation, OpenMP-parallel over the blocks of each scale.
ApResult ap_constant_parallel(std::span<const double> w, double p);

/// Direct summation of every block, one at a time; the testing and
/// benchmarking reference.
ApResult ap_constant_serial(std::span<const double> w, double p);

} // namespace kernels
} // namespace dispersive
