#pragma once

#include "dispersive/field.hpp"

#include <string>
#include <vector>

namespace dispersive {

enum class Model { nls, gkdv, bo };

/// One of the three model equations:
///   NLS   i u_t + u_xx = mu |u|^{a-1} u
///   gKdV  u_t + u_xxx + u^k u_x = 0
///   BO    u_t + H u_xx + u u_x = 0
/// `nonlinear_coefficient` scales the nonlinear term; 0 gives the linear flow.
struct EquationSpec {
    Model model = Model::nls;
    double a = 3.0;
    int mu = 1;
    int k = 1;
    double nonlinear_coefficient = 1.0;

    static EquationSpec nls(double a, int mu);
    static EquationSpec gkdv(int k);
    static EquationSpec bo();

    /// Throws std::invalid_argument when a <= 1, mu not +-1 or k < 1.
    void validate() const;
    EquationSpec linear_only() const;
    /// gKdV and BO evolve real fields.
    bool real_valued() const { return model != Model::nls; }

    /// Scaling-critical Sobolev index: NLS 1/2 - 2/(a-1); gKdV table
    /// {-3/4, 1/4, -1/6, (k-4)/(2k)} (the local well-posedness thresholds);
    /// BO -1/2 from u -> lambda u(lambda x, lambda^2 t).
    double critical_index() const;
    std::string name() const;
};

Model parse_model(const std::string& name);
std::string model_name(Model m);

struct StepperConfig {
    double dt = 1e-3;
    /// Fraction of the n/2 wavenumbers kept after each nonlinear evaluation.
    double dealias = 2.0 / 3.0;

    void validate() const;
};

/// Snapshots of one run plus named per-snapshot diagnostics.
struct Trajectory {
    EquationSpec spec;
    std::vector<double> times;
    std::vector<Field> snapshots;
    /// Column names of `diagnostics`; every row has this many entries.
    std::vector<std::string> diagnostic_names;
    std::vector<std::vector<double>> diagnostics;

    bool failed = false;
    double failure_time = 0.0;
    std::string failure_message;
    /// CFL, boundary gate and snapshot snapping notes.
    std::vector<std::string> warnings;

    const Grid& grid() const;
    std::size_t size() const { return times.size(); }
    /// Column of one diagnostic; empty if the name is unknown.
    std::vector<double> diagnostic(const std::string& name) const;
};

} // namespace dispersive
