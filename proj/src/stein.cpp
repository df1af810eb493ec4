#include "dispersive/stein.hpp"

#include "dispersive/parallel.hpp"
#include "dispersive/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dispersive {
namespace kernels {
namespace {

struct SteinTables {
    std::vector<double> weight; // h ((j + 1/2) h)^{-1-2b}
    std::vector<double> prefix; // prefix[J] = sum_{j<J} h ((j + 1/2) h)^{1-2b}
};

SteinTables make_tables(std::size_t n, double h, double b) {
    SteinTables t;
    t.weight.resize(n);
    t.prefix.resize(n + 1);
    const double p = 1.0 - 2.0 * b;
    t.prefix[0] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double r = (static_cast<double>(j) + 0.5) * h;
        t.weight[j] = h * std::pow(r, -1.0 - 2.0 * b);
        t.prefix[j + 1] = t.prefix[j] + h * std::pow(r, p);
    }
    return t;
}

void check_inputs(const SteinInputs& in, std::span<double> out) {
    const std::size_t n = in.at_nodes.size();
    if (in.at_midcell.size() != n || in.slope.size() != n || out.size() != n) {
        throw std::invalid_argument("stein kernel: input/output lengths differ");
    }
    if (!(in.b > 0.0 && in.b < 1.0)) throw std::invalid_argument("stein kernel: b must lie in (0, 1)");
}

} // namespace

void stein_square_parallel(const SteinInputs& in, std::span<double> out) {
    check_inputs(in, out);
    const std::size_t n = in.at_nodes.size();
    const double h = in.h;
    const double b = in.b;
    const double p1 = 2.0 - 2.0 * b;
    const SteinTables tab = make_tables(n, h, b);
    const auto* f = in.at_nodes.data();
    const auto* g = in.at_midcell.data();
    const auto* w = tab.weight.data();
    const bool periodic = in.extension == SteinExtension::periodic;
    const long nn = static_cast<long>(n);

    DISPERSIVE_OMP_PARALLEL_FOR
    for (long ii = 0; ii < nn; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const cplx fi = f[i];
        double sum = 0.0;
        double correction = 0.0;
        double tail = 0.0;
        if (periodic) {
            const std::size_t half = n / 2;
            for (std::size_t j = 0; j < half; ++j) {
                sum += w[j] * (std::norm(fi - g[(i + j) % n]) + std::norm(fi - g[(i + n - j - 1) % n]));
            }
            const double R = static_cast<double>(half) * h;
            correction = 2.0 * std::pow(R, p1) / p1 - 2.0 * tab.prefix[half];
        } else {
            const std::size_t right = n - i;
            for (std::size_t j = 0; j < right; ++j) sum += w[j] * std::norm(fi - g[i + j]);
            for (std::size_t j = 0; j < i; ++j) sum += w[j] * std::norm(fi - g[i - j - 1]);
            const double Rr = static_cast<double>(right) * h;
            const double Rl = static_cast<double>(i) * h;
            correction = (std::pow(Rr, p1) + std::pow(Rl, p1)) / p1 - tab.prefix[right] - tab.prefix[i];
            const double dl = std::max(Rl, 0.5 * h);
            const double dr = std::max(Rr, 0.5 * h);
            tail = std::norm(fi) * (std::pow(dl, -2.0 * b) + std::pow(dr, -2.0 * b)) / (2.0 * b);
        }
        out[i] = std::max(0.0, sum + correction * std::norm(in.slope[i]) + tail);
    }
}

void stein_square_serial(const SteinInputs& in, std::span<double> out) {
    check_inputs(in, out);
    const std::size_t n = in.at_nodes.size();
    const double h = in.h;
    const double b = in.b;
    const double p = 1.0 - 2.0 * b;
    const bool periodic = in.extension == SteinExtension::periodic;

    // Exact integral of |r|^p over one cell minus its midpoint value.
    auto cell_defect = [&](std::size_t j) {
        const double a = static_cast<double>(j) * h;
        const double c = a + h;
        const double mid = a + 0.5 * h;
        return (std::pow(c, p + 1.0) - std::pow(a, p + 1.0)) / (p + 1.0) - h * std::pow(mid, p);
    };
    auto pair_term = [&](cplx fx, cplx fy, std::size_t j) {
        const double r = (static_cast<double>(j) + 0.5) * h;
        return h * std::norm(fx - fy) / std::pow(r, 1.0 + 2.0 * b);
    };

    for (std::size_t i = 0; i < n; ++i) {
        const cplx fi = in.at_nodes[i];
        double total = 0.0;
        double defect = 0.0;
        if (periodic) {
            for (std::size_t j = 0; j < n / 2; ++j) {
                const std::size_t right = (i + j) % n;
                const std::size_t left = (i + n - j - 1) % n;
                total += pair_term(fi, in.at_midcell[right], j);
                total += pair_term(fi, in.at_midcell[left], j);
                defect += 2.0 * cell_defect(j);
            }
        } else {
            for (std::size_t m = 0; m < n; ++m) {
                // Cell [x_m, x_{m+1}] with midpoint x_m + h/2.
                const std::size_t j = m >= i ? m - i : i - m - 1;
                total += pair_term(fi, in.at_midcell[m], j);
                defect += cell_defect(j);
            }
            const double dl = std::max(static_cast<double>(i) * h, 0.5 * h);
            const double dr = std::max(static_cast<double>(n - i) * h, 0.5 * h);
            total += std::norm(fi) * (std::pow(dl, -2.0 * b) + std::pow(dr, -2.0 * b)) / (2.0 * b);
        }
        out[i] = std::max(0.0, total + defect * std::norm(in.slope[i]));
    }
}

} // namespace kernels

namespace {

std::vector<double> stein_square(const Field& f, double b, SteinExtension ext) {
    const Grid& g = f.grid();
    const double h = g.spacing();
    const Field mid = apply_multiplier(
        f, [h](double xi) { return std::polar(1.0, 0.5 * xi * h); }, Nyquist::zero);
    const Field slope = derivative(f, 1);
    std::vector<double> sq(g.size());
    kernels::SteinInputs in{f.values(), mid.values(), slope.values(), h, g.half_length(), b, ext};
    kernels::stein_square_parallel(in, sq);
    return sq;
}

} // namespace

Field stein_deriv(const Field& f, FracOrder b, SteinExtension ext) {
    b.require_open_unit("stein_deriv");
    const auto sq = stein_square(f, b.value(), ext);
    std::vector<cplx> v(sq.size());
    for (std::size_t i = 0; i < sq.size(); ++i) v[i] = std::sqrt(sq[i]);
    return Field(f.grid(), std::move(v));
}

double stein_norm(const Field& f, FracOrder b) {
    b.require_open_unit("stein_norm");
    const Grid& g = f.grid();
    const double h = g.spacing();
    const double L = g.half_length();
    const double bb = b.value();
    const auto sq = stein_square(f, bb, SteinExtension::zero);
    double inside = 0.0;
    for (double v : sq) inside += v;
    inside *= h;
    // For |x| > L the square function is int |f(y)|^2 |x - y|^{-1-2b} dy;
    // integrating over x first leaves |f(y)|^2 dist(y, edge)^{-2b} / 2b.
    double outside = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double x = g.node(j);
        const double dl = std::max(x + L, 0.5 * h);
        const double dr = std::max(L - x, 0.5 * h);
        outside += std::norm(f[j]) * (std::pow(dl, -2.0 * bb) + std::pow(dr, -2.0 * bb));
    }
    outside *= h / (2.0 * bb);
    return std::sqrt(inside + outside);
}

double stein_riesz_constant(FracOrder b) {
    b.require_open_unit("stein_riesz_constant");
    const double bb = b.value();
    return std::sqrt(2.0 * std::numbers::pi / (std::tgamma(2.0 * bb + 1.0) * std::sin(std::numbers::pi * bb)));
}

std::vector<double> stein_deriv_function(const std::function<cplx(double)>& f,
                                         const std::function<cplx(double)>& df, std::span<const double> points,
                                         FracOrder b, double h, double radius, double tail_mean_square) {
    b.require_open_unit("stein_deriv_function");
    if (!(h > 0.0) || !(radius > h)) throw std::invalid_argument("stein_deriv_function: need 0 < h < radius");
    const double bb = b.value();
    const double p = 1.0 - 2.0 * bb;
    const auto cells = static_cast<std::size_t>(std::llround(radius / h));
    const double R = static_cast<double>(cells) * h;
    double midpoint_sum = 0.0;
    std::vector<double> w(cells);
    for (std::size_t j = 0; j < cells; ++j) {
        const double r = (static_cast<double>(j) + 0.5) * h;
        w[j] = h * std::pow(r, -1.0 - 2.0 * bb);
        midpoint_sum += h * std::pow(r, p);
    }
    const double defect = 2.0 * (std::pow(R, p + 1.0) / (p + 1.0) - midpoint_sum);
    std::vector<double> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double x = points[i];
        const cplx fx = f(x);
        double sum = 0.0;
        for (std::size_t j = 0; j < cells; ++j) {
            const double r = (static_cast<double>(j) + 0.5) * h;
            sum += w[j] * (std::norm(fx - f(x + r)) + std::norm(fx - f(x - r)));
        }
        sum += defect * std::norm(df(x));
        sum += (std::norm(fx) + tail_mean_square) * std::pow(R, -2.0 * bb) / bb;
        out[i] = std::sqrt(std::max(0.0, sum));
    }
    return out;
}

} // namespace dispersive
