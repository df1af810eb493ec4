#include "dispersive/propagators.hpp"

#include "dispersive/fft.hpp"
#include "dispersive/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dispersive {

cplx linear_symbol(const EquationSpec& spec, double xi) {
    switch (spec.model) {
    case Model::nls:
        return cplx(0.0, -xi * xi);
    case Model::gkdv:
        return cplx(0.0, xi * xi * xi);
    case Model::bo:
        return cplx(0.0, -xi * std::abs(xi));
    }
    return 0.0;
}

namespace {

bool odd_group(const EquationSpec& spec) { return spec.model != Model::nls; }

// Lawson RK4 in coefficient space c = fft(u) / n. The physical-space phase
// (-1)^k of the centred transform commutes with every diagonal operator here,
// so it is left out.
class Stepper {
public:
    Stepper(const Grid& grid, const EquationSpec& spec, const StepperConfig& cfg)
        : grid_(grid), spec_(spec), n_(grid.size()), half_(n_), full_(n_), ik_(n_), mask_(n_), u_(n_), w_(n_) {
        const long cutoff = grid.dealias_cutoff(cfg.dealias);
        for (std::size_t j = 0; j < n_; ++j) {
            const double xi = grid.frequency(j);
            const cplx lam = linear_symbol(spec, xi);
            half_[j] = std::exp(lam * (0.5 * cfg.dt));
            full_[j] = std::exp(lam * cfg.dt);
            ik_[j] = cplx(0.0, xi);
            mask_[j] = std::labs(grid.wavenumber(j)) <= cutoff ? 1.0 : 0.0;
        }
        if (odd_group(spec)) {
            const std::size_t nyq = grid.nyquist_slot();
            half_[nyq] = full_[nyq] = 0.0;
            ik_[nyq] = 0.0;
        }
    }

    std::vector<cplx> to_coeffs(const Field& f) const {
        std::vector<cplx> c(n_);
        fft::forward(f.values(), c);
        const double inv = 1.0 / static_cast<double>(n_);
        for (auto& z : c) z *= inv;
        if (odd_group(spec_)) project_real(c);
        return c;
    }

    Field to_field(const std::vector<cplx>& c) const {
        std::vector<cplx> v(n_);
        fft::backward(c, v);
        if (odd_group(spec_)) {
            for (auto& z : v) z = z.real();
        }
        return Field(grid_, std::move(v));
    }

    // N(u) in coefficient space.
    void nonlinear(const std::vector<cplx>& c, std::vector<cplx>& out) {
        const double coef = spec_.nonlinear_coefficient;
        if (coef == 0.0) {
            std::fill(out.begin(), out.end(), 0.0);
            return;
        }
        fft::backward(c, u_);
        const double inv = 1.0 / static_cast<double>(n_);
        if (spec_.model == Model::nls) {
            const double power = spec_.a - 1.0;
            const cplx factor(0.0, -coef * spec_.mu);
            for (std::size_t j = 0; j < n_; ++j) {
                const double r = std::abs(u_[j]);
                w_[j] = factor * (r == 0.0 ? 0.0 : std::pow(r, power)) * u_[j];
            }
            fft::forward(w_, out);
            for (std::size_t j = 0; j < n_; ++j) out[j] *= mask_[j] * inv;
            return;
        }
        const int k = spec_.model == Model::gkdv ? spec_.k : 1;
        for (std::size_t j = 0; j < n_; ++j) {
            const double r = u_[j].real();
            w_[j] = std::pow(r, k + 1) / (k + 1.0);
        }
        fft::forward(w_, out);
        for (std::size_t j = 0; j < n_; ++j) out[j] *= -coef * ik_[j] * mask_[j] * inv;
    }

    void step(std::vector<cplx>& c) {
        std::vector<cplx> k1(n_), k2(n_), k3(n_), k4(n_), tmp(n_), ec(n_);
        const double dt = dt_;
        nonlinear(c, k1);
        for (auto& z : k1) z *= dt;
        for (std::size_t j = 0; j < n_; ++j) {
            ec[j] = half_[j] * c[j];
            tmp[j] = half_[j] * (c[j] + 0.5 * k1[j]);
        }
        nonlinear(tmp, k2);
        for (auto& z : k2) z *= dt;
        for (std::size_t j = 0; j < n_; ++j) tmp[j] = ec[j] + 0.5 * k2[j];
        nonlinear(tmp, k3);
        for (auto& z : k3) z *= dt;
        for (std::size_t j = 0; j < n_; ++j) tmp[j] = full_[j] * c[j] + half_[j] * k3[j];
        nonlinear(tmp, k4);
        for (auto& z : k4) z *= dt;
        for (std::size_t j = 0; j < n_; ++j) {
            c[j] = full_[j] * c[j] + (full_[j] * k1[j] + 2.0 * half_[j] * (k2[j] + k3[j]) + k4[j]) / 6.0;
        }
        if (odd_group(spec_)) project_real(c);
    }

    void set_dt(double dt) { dt_ = dt; }

private:
    // Keeps the coefficients of the real part: c_k <- (c_k + conj(c_{-k})) / 2.
    void project_real(std::vector<cplx>& c) const {
        for (std::size_t j = 1; j < n_ / 2; ++j) {
            const cplx a = c[j];
            const cplx b = c[n_ - j];
            c[j] = 0.5 * (a + std::conj(b));
            c[n_ - j] = std::conj(c[j]);
        }
        c[0] = c[0].real();
        c[n_ / 2] = 0.0;
    }

    Grid grid_;
    EquationSpec spec_;
    std::size_t n_;
    std::vector<cplx> half_, full_, ik_;
    std::vector<double> mask_;
    std::vector<cplx> u_, w_;
    double dt_ = 0.0;
};

bool all_finite(const std::vector<cplx>& c) {
    return std::all_of(c.begin(), c.end(), [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

} // namespace

Field linear_group(const Field& f, const EquationSpec& spec, double t) {
    if (t == 0.0) return f;
    return apply_multiplier(
        f, [&](double xi) { return std::exp(linear_symbol(spec, xi) * t); },
        odd_group(spec) ? Nyquist::zero : Nyquist::keep);
}

Field nonlinear_term(const Field& u, const EquationSpec& spec, double dealias) {
    spec.validate();
    StepperConfig cfg;
    cfg.dealias = dealias;
    cfg.validate();
    Stepper s(u.grid(), spec, cfg);
    const auto c = s.to_coeffs(u);
    std::vector<cplx> out(c.size());
    s.nonlinear(c, out);
    std::vector<cplx> v(c.size());
    fft::backward(out, v);
    return Field(u.grid(), std::move(v));
}

Field nonlinear_step(const Field& f, const EquationSpec& spec, const StepperConfig& cfg) {
    spec.validate();
    cfg.validate();
    Stepper s(f.grid(), spec, cfg);
    s.set_dt(cfg.dt);
    auto c = s.to_coeffs(f);
    s.step(c);
    if (!all_finite(c)) throw std::runtime_error("nonlinear_step: state became non-finite");
    return s.to_field(c);
}

std::vector<double> uniform_times(double T, std::size_t count) {
    if (count == 0) throw std::invalid_argument("uniform_times: count must be positive");
    std::vector<double> t(count + 1);
    for (std::size_t i = 0; i <= count; ++i) t[i] = T * static_cast<double>(i) / static_cast<double>(count);
    return t;
}

Trajectory evolve(const Field& u0, const EquationSpec& spec, const StepperConfig& cfg, double T,
                  std::vector<double> snapshot_times, const DiagnosticHook& hook) {
    spec.validate();
    cfg.validate();
    if (!(T >= 0.0) || !std::isfinite(T)) throw std::invalid_argument("evolve: T must be finite and >= 0");
    if (spec.real_valued() && !u0.is_real()) {
        throw std::invalid_argument("evolve: " + spec.name() + " evolves real fields; initial data is complex");
    }
    if (snapshot_times.empty()) snapshot_times.push_back(T);
    for (double t : snapshot_times) {
        if (!(t >= 0.0 && t <= T * (1.0 + 1e-12))) {
            std::ostringstream msg;
            msg << "evolve: snapshot time " << t << " outside [0, " << T << "]";
            throw std::invalid_argument(msg.str());
        }
    }
    std::sort(snapshot_times.begin(), snapshot_times.end());

    Trajectory traj;
    traj.spec = spec;
    const Grid& grid = u0.grid();
    const long steps = T == 0.0 ? 0 : static_cast<long>(std::ceil(T / cfg.dt - 1e-9));
    const double dt = steps == 0 ? cfg.dt : T / static_cast<double>(steps);
    if (steps > 0 && std::abs(dt - cfg.dt) > 1e-12 * cfg.dt) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "dt reduced from " << cfg.dt << " to " << dt << " to land on T";
        traj.warnings.push_back(msg.str());
    }

    // Snapshot step indices, snapped to the nearest step.
    std::vector<long> snap_steps;
    for (double t : snapshot_times) {
        const long s = steps == 0 ? 0 : std::clamp(static_cast<long>(std::llround(t / dt)), 0L, steps);
        const double snapped = static_cast<double>(s) * dt;
        if (std::abs(snapped - t) > 1e-9 * std::max(1.0, t)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "snapshot t=" << t << " snapped to t=" << snapped;
            traj.warnings.push_back(msg.str());
        }
        if (snap_steps.empty() || snap_steps.back() != s) snap_steps.push_back(s);
    }

    const BoundaryGate gate = boundary_gate(u0);
    if (!gate.negligible) {
        std::ostringstream msg;
        msg << "initial data is not boundary-negligible (edge max " << gate.edge_max << ", field max " << gate.field_max
            << ")";
        traj.warnings.push_back(msg.str());
    }

    const bool transported = spec.model != Model::nls && spec.nonlinear_coefficient != 0.0;
    bool cfl_warned = false;
    auto check_cfl = [&](const Field& u, double t) {
        if (!transported || cfl_warned) return;
        const double amp = std::pow(u.max_abs(), spec.model == Model::gkdv ? spec.k : 1) * std::abs(spec.nonlinear_coefficient);
        if (amp > 0.0 && dt > grid.spacing() / (std::numbers::pi * amp)) {
            std::ostringstream msg;
            msg << "CFL heuristic dt <= h/(pi max|u|) violated at t=" << t;
            traj.warnings.push_back(msg.str());
            cfl_warned = true;
        }
    };

    auto record = [&](double t, const Field& u) {
        traj.times.push_back(t);
        traj.snapshots.push_back(u);
        if (hook) {
            const Diagnostics d = hook(t, u);
            if (traj.diagnostic_names.empty()) {
                for (const auto& kv : d) traj.diagnostic_names.push_back(kv.first);
            }
            std::vector<double> row;
            for (const auto& kv : d) row.push_back(kv.second);
            traj.diagnostics.push_back(std::move(row));
        }
    };

    Stepper stepper(grid, spec, cfg);
    stepper.set_dt(dt);
    auto c = stepper.to_coeffs(u0);
    std::size_t next = 0;
    check_cfl(u0, 0.0);
    if (snap_steps[next] == 0) {
        record(0.0, spec.real_valued() ? stepper.to_field(c) : u0);
        ++next;
    }
    for (long s = 1; s <= steps && next < snap_steps.size(); ++s) {
        stepper.step(c);
        const double t = static_cast<double>(s) * dt;
        if (!all_finite(c)) {
            traj.failed = true;
            traj.failure_time = t;
            std::ostringstream msg;
            msg.precision(17);
            msg << "non-finite state at t=" << t << " (step " << s << ")";
            traj.failure_message = msg.str();
            break;
        }
        if (snap_steps[next] == s) {
            const Field u = stepper.to_field(c);
            check_cfl(u, t);
            record(t, u);
            ++next;
        }
    }
    return traj;
}

} // namespace dispersive
