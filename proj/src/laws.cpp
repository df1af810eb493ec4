#include "dispersive/laws.hpp"

#include "dispersive/operators.hpp"
#include "dispersive/spectral.hpp"
#include "dispersive/stein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dispersive {

double InvariantReport::get(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return values[i];
    }
    throw std::invalid_argument("invariant '" + name + "' not in report");
}

namespace {

void require_real(const Field& u, const EquationSpec& spec) {
    if (!u.is_real()) throw std::invalid_argument("invariants: " + spec.name() + " invariants need a real field");
}

} // namespace

InvariantReport invariants(const Field& u, const EquationSpec& spec) {
    spec.validate();
    InvariantReport r;
    const double coef = spec.nonlinear_coefficient;
    if (spec.model == Model::nls) {
        const double mass = l2_squared(u);
        const double kinetic = l2_squared(derivative(u, 1));
        double potential = 0.0;
        for (const auto& z : u.values()) potential += std::pow(std::abs(z), spec.a + 1.0);
        potential *= u.grid().spacing() * 2.0 * spec.mu * coef / (spec.a + 1.0);
        r.names = {"mass", "energy"};
        r.values = {mass, kinetic + potential};
        return r;
    }
    require_real(u, spec);
    const Field v = u.real_part();
    const double i1 = integrate(v).real();
    const double i2 = l2_squared(v);
    double i3 = 0.0;
    if (spec.model == Model::gkdv) {
        const int k = spec.k;
        double poly = 0.0;
        for (const auto& z : v.values()) poly += std::pow(z.real(), k + 2);
        poly *= v.grid().spacing();
        i3 = l2_squared(derivative(v, 1)) - coef * 2.0 / ((k + 1.0) * (k + 2.0)) * poly;
    } else {
        double cube = 0.0;
        for (const auto& z : v.values()) cube += std::pow(z.real(), 3);
        cube *= v.grid().spacing();
        i3 = l2_squared(riesz_deriv(v, FracOrder(0.5))) - coef * cube / 3.0;
    }
    r.names = {"I1", "I2", "I3"};
    r.values = {i1, i2, i3};
    return r;
}

double relative_drift(double value, double initial) {
    return std::abs(value - initial) / std::max(std::abs(initial), 1e-14);
}

DiagnosticHook invariant_hook(const EquationSpec& spec) {
    return [spec](double, const Field& u) {
        const InvariantReport r = invariants(u, spec);
        Diagnostics d;
        for (std::size_t i = 0; i < r.names.size(); ++i) d.emplace_back(r.names[i], r.values[i]);
        return d;
    };
}

double half_derivative_energy_stein(const Field& u) {
    const FracOrder b(0.5);
    const double c = stein_riesz_constant(b);
    const double s = stein_norm(u, b);
    return s * s / (c * c);
}

KatoWeight KatoWeight::constant(const Grid& grid, double value) {
    return KatoWeight{Field::constant(grid, value), Field::zeros(grid), Field::zeros(grid)};
}

KatoWeight KatoWeight::bracket(const Grid& grid, double p) {
    // phi = r^p with r^2 = 1 + x^2:
    //   phi'   = p x r^{p-2}
    //   phi''  = p r^{p-2} + p (p-2) x^2 r^{p-4}
    //   phi''' = p (p-2) x r^{p-4} (3 + (p-4) x^2 / r^2)
    auto phi = [p](double x) { return std::pow(1.0 + x * x, 0.5 * p); };
    auto d1 = [p](double x) { return p * x * std::pow(1.0 + x * x, 0.5 * p - 1.0); };
    auto d3 = [p](double x) {
        const double r2 = 1.0 + x * x;
        return p * (p - 2.0) * x * std::pow(r2, 0.5 * p - 2.0) * (3.0 + (p - 4.0) * x * x / r2);
    };
    return KatoWeight{Field::sample(grid, phi), Field::sample(grid, d1), Field::sample(grid, d3)};
}

namespace {

struct KatoTerms {
    double q = 0.0;         // int u^2 phi
    double dispersive = 0.0; // 3 int u_x^2 phi'
    double weight3 = 0.0;   // int u^2 phi'''
    double nonlinear = 0.0; // (2c/(k+2)) int u^{k+2} phi'
};

KatoTerms kato_terms(const Field& u, const KatoWeight& w, int k, double coef) {
    const Field ux = derivative(u, 1);
    const double h = u.grid().spacing();
    KatoTerms t;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double v = u[j].real();
        const double vx = ux[j].real();
        t.q += v * v * w.phi[j].real();
        t.dispersive += vx * vx * w.d1[j].real();
        t.weight3 += v * v * w.d3[j].real();
        t.nonlinear += std::pow(v, k + 2) * w.d1[j].real();
    }
    t.q *= h;
    t.dispersive *= 3.0 * h;
    t.weight3 *= h;
    t.nonlinear *= 2.0 * coef * h / (k + 2.0);
    return t;
}

std::vector<KatoTerms> all_terms(const Trajectory& traj, const KatoWeight& phi, int k, double& dt) {
    if (traj.snapshots.size() < 3) throw std::invalid_argument("kato_residual: need at least 3 snapshots");
    if (k < 1) throw std::invalid_argument("kato_residual: k must be >= 1");
    if (!(phi.phi.grid() == traj.grid())) throw std::invalid_argument("kato_residual: weight grid differs from trajectory grid");
    const std::size_t count = traj.times.size();
    dt = traj.times[1] - traj.times[0];
    for (std::size_t i = 2; i < count; ++i) {
        if (std::abs(traj.times[i] - traj.times[i - 1] - dt) > 1e-9 * std::max(1.0, dt)) {
            throw std::invalid_argument("kato_residual: snapshots must be equally spaced");
        }
    }
    std::vector<KatoTerms> terms;
    for (const auto& u : traj.snapshots) {
        if (!u.is_real()) throw std::invalid_argument("kato_residual: trajectory must be real");
        terms.push_back(kato_terms(u, phi, k, traj.spec.nonlinear_coefficient));
    }
    return terms;
}

} // namespace

std::vector<double> kato_residual(const Trajectory& traj, const KatoWeight& phi, int k) {
    double dt = 0.0;
    const auto terms = all_terms(traj, phi, k, dt);
    std::vector<double> out;
    for (std::size_t i = 1; i + 1 < terms.size(); ++i) {
        const double dq = (terms[i + 1].q - terms[i - 1].q) / (2.0 * dt);
        out.push_back(dq + terms[i].dispersive - terms[i].weight3 - terms[i].nonlinear);
    }
    return out;
}

double kato_scale(const Trajectory& traj, const KatoWeight& phi, int k) {
    double dt = 0.0;
    const auto terms = all_terms(traj, phi, k, dt);
    double scale = 0.0;
    for (std::size_t i = 1; i + 1 < terms.size(); ++i) {
        const double dq = (terms[i + 1].q - terms[i - 1].q) / (2.0 * dt);
        scale = std::max(scale, std::abs(dq) + std::abs(terms[i].dispersive) + std::abs(terms[i].weight3) +
                                    std::abs(terms[i].nonlinear));
    }
    return scale;
}

cplx moment(const Field& f, int j) {
    if (j < 0) throw std::invalid_argument("moment: order must be >= 0");
    const Grid& g = f.grid();
    cplx sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) sum += std::pow(g.node(i), j) * f[i];
    return sum * g.spacing();
}

} // namespace dispersive
