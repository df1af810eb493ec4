#include "dispersive/norms.hpp"

#include "dispersive/operators.hpp"
#include "dispersive/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dispersive {

double weighted_l2_measure(const Field& f, double q) {
    if (!(q >= 0.0) || !std::isfinite(q)) throw std::invalid_argument("weighted_l2: weight exponent must be >= 0");
    const Grid& g = f.grid();
    double sum = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double x = std::abs(g.node(j));
        const double w = q == 0.0 ? 1.0 : std::pow(x, q);
        sum += w * std::norm(f[j]);
    }
    return std::sqrt(sum * g.spacing());
}

double weighted_l2(const Field& f, double m, WeightKind kind) {
    if (!(m >= 0.0) || !std::isfinite(m)) throw std::invalid_argument("weighted_l2: m must be >= 0");
    if (kind == WeightKind::power) return weighted_l2_measure(f, 2.0 * m);
    const Grid& g = f.grid();
    double sum = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double x = g.node(j);
        sum += std::pow(1.0 + x * x, m) * std::norm(f[j]);
    }
    return std::sqrt(sum * g.spacing());
}

double sobolev(const Field& f, double s) {
    return std::sqrt(l2_squared(bessel_potential(f, s)));
}

double lebesgue(const Field& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lebesgue: p must be >= 1");
    if (std::isinf(p)) return f.max_abs();
    if (p == 2.0) return std::sqrt(l2_squared(f));
    double sum = 0.0;
    for (const auto& z : f.values()) sum += std::pow(std::abs(z), p);
    return std::pow(sum * f.grid().spacing(), 1.0 / p);
}

double weighted_lebesgue(const Field& f, std::span<const double> w, double p) {
    if (w.size() != f.size()) throw std::invalid_argument("weighted_lebesgue: weight length mismatch");
    if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("weighted_lebesgue: p must lie in [1, inf)");
    double sum = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) sum += w[j] * std::pow(std::abs(f[j]), p);
    return std::pow(sum * f.grid().spacing(), 1.0 / p);
}

namespace {

// Norm of equally spaced samples v over [0, (count-1) dt].
double time_norm(const std::vector<double>& v, double dt, double q) {
    if (v.size() == 1) return v[0];
    if (std::isinf(q)) return *std::max_element(v.begin(), v.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double wt = (i == 0 || i + 1 == v.size()) ? 0.5 : 1.0;
        sum += wt * std::pow(v[i], q);
    }
    return std::pow(sum * dt, 1.0 / q);
}

double space_norm(std::span<const double> v, double h, double p) {
    if (std::isinf(p)) return *std::max_element(v.begin(), v.end());
    double sum = 0.0;
    for (double a : v) sum += std::pow(a, p);
    return std::pow(sum * h, 1.0 / p);
}

} // namespace

double mixed_norm(const Trajectory& traj, double p_x, double q_t, MixedOrder order, const Symbol& deriv,
                  Nyquist nyquist) {
    if (traj.snapshots.empty()) throw std::invalid_argument("mixed_norm: empty trajectory");
    if (!(p_x >= 1.0) || !(q_t >= 1.0)) throw std::invalid_argument("mixed_norm: exponents must be >= 1");
    const std::size_t count = traj.snapshots.size();
    double dt = 0.0;
    if (count > 1) {
        dt = (traj.times.back() - traj.times.front()) / static_cast<double>(count - 1);
        for (std::size_t i = 1; i < count; ++i) {
            if (std::abs(traj.times[i] - traj.times[i - 1] - dt) > 1e-9 * std::max(1.0, std::abs(dt))) {
                throw std::invalid_argument("mixed_norm: snapshots must be equally spaced in t");
            }
        }
    }
    const Grid& g = traj.grid();
    const std::size_t n = g.size();
    const double h = g.spacing();
    std::vector<std::vector<double>> mag(count, std::vector<double>(n));
    for (std::size_t i = 0; i < count; ++i) {
        const Field d = apply_multiplier(traj.snapshots[i], deriv, nyquist);
        for (std::size_t j = 0; j < n; ++j) mag[i][j] = std::abs(d[j]);
    }
    if (order == MixedOrder::space_then_time) {
        std::vector<double> per_time(count);
        for (std::size_t i = 0; i < count; ++i) per_time[i] = space_norm(mag[i], h, p_x);
        return time_norm(per_time, dt, q_t);
    }
    std::vector<double> per_point(n);
    std::vector<double> column(count);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < count; ++i) column[i] = mag[i][j];
        per_point[j] = time_norm(column, dt, q_t);
    }
    return space_norm(per_point, h, p_x);
}

std::vector<double> power_weight(const Grid& grid, double alpha) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("power_weight: alpha must be finite");
    std::vector<double> w(grid.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double x = std::abs(grid.node(j));
        w[j] = alpha == 0.0 ? 1.0 : std::pow(x, alpha);
    }
    w[grid.origin_node()] = alpha == 0.0 ? 1.0 : std::pow(0.5 * grid.spacing(), alpha);
    return w;
}

namespace kernels {
namespace {

void check_ap_inputs(std::span<const double> w, double p) {
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("ap_constant: p must lie in (1, inf)");
    const std::size_t n = w.size();
    if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("ap_constant: weight length must be a power of two");
    for (std::size_t j = 0; j < n; ++j) {
        if (!(w[j] > 0.0) || !std::isfinite(w[j])) {
            throw std::invalid_argument("ap_constant: weight must be positive and finite (node " + std::to_string(j) + ")");
        }
    }
}

double block_value(double avg_w, double avg_dual, double p) { return avg_w * std::pow(avg_dual, p - 1.0); }

// Larger value wins; ties go to the smaller (scale, start) so the result does
// not depend on evaluation order.
void offer(ApResult& best, double value, std::size_t first, std::size_t count) {
    if (value > best.value || (value == best.value && (count < best.count || (count == best.count && first < best.first)))) {
        best = ApResult{value, first, count};
    }
}

} // namespace

ApResult ap_constant_parallel(std::span<const double> w, double p) {
    check_ap_inputs(w, p);
    const std::size_t n = w.size();
    const double dual = 1.0 - p / (p - 1.0); // 1 - p'
    std::vector<double> pw(n + 1, 0.0), pd(n + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        pw[j + 1] = pw[j] + w[j];
        pd[j + 1] = pd[j] + std::pow(w[j], dual);
    }
    ApResult best{-std::numeric_limits<double>::infinity(), 0, 0};
    for (std::size_t m = 2; m <= n; m *= 2) {
        const long blocks = static_cast<long>(n / m);
        std::vector<double> values(static_cast<std::size_t>(blocks));
        DISPERSIVE_OMP_PARALLEL_FOR
        for (long b = 0; b < blocks; ++b) {
            const std::size_t s = static_cast<std::size_t>(b) * m;
            const double inv = 1.0 / static_cast<double>(m);
            values[static_cast<std::size_t>(b)] =
                block_value((pw[s + m] - pw[s]) * inv, (pd[s + m] - pd[s]) * inv, p);
        }
        for (long b = 0; b < blocks; ++b) offer(best, values[static_cast<std::size_t>(b)], static_cast<std::size_t>(b) * m, m);
    }
    return best;
}

ApResult ap_constant_serial(std::span<const double> w, double p) {
    check_ap_inputs(w, p);
    const std::size_t n = w.size();
    const double pp = p / (p - 1.0);
    ApResult best{-std::numeric_limits<double>::infinity(), 0, 0};
    for (std::size_t m = 2; m <= n; m *= 2) {
        for (std::size_t s = 0; s < n; s += m) {
            double sw = 0.0, sd = 0.0;
            for (std::size_t j = s; j < s + m; ++j) {
                sw += w[j];
                sd += std::pow(w[j], 1.0 - pp);
            }
            offer(best, block_value(sw / m, sd / m, p), s, m);
        }
    }
    return best;
}

} // namespace kernels

ApResult ap_constant(std::span<const double> w, double p) { return kernels::ap_constant_parallel(w, p); }

} // namespace dispersive
