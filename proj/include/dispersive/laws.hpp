#pragma once

#include "dispersive/equation.hpp"
#include "dispersive/field.hpp"
#include "dispersive/propagators.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dispersive {

/// Conserved functionals of one state:
///   NLS  mass = int |u|^2, energy = int |u_x|^2 + (2 mu/(a+1)) |u|^{a+1}
///   gKdV I1 = int u, I2 = int u^2, I3 = int u_x^2 - (2/((k+1)(k+2))) u^{k+2}
///   BO   I1 = int u, I2 = int u^2, I3 = int |D^{1/2} u|^2 - u^3/3
/// gKdV and BO reject complex input. The nonlinear parts carry the equation's
/// nonlinear coefficient.
struct InvariantReport {
    std::vector<std::string> names;
    std::vector<double> values;

    double get(const std::string& name) const;
};

InvariantReport invariants(const Field& u, const EquationSpec& spec);

/// |v - v0| / max(|v0|, 1e-14).
double relative_drift(double value, double initial);

/// Diagnostic hook recording the invariants of every snapshot.
DiagnosticHook invariant_hook(const EquationSpec& spec);

/// int |D^{1/2} u|^2 through the Stein square function: ||D^{1/2} u||^2 =
/// ||stein u||^2 / C(1/2)^2. Cross-check of the multiplier route in I3.
double half_derivative_energy_stein(const Field& u);

/// Smooth weight phi with its first and third derivatives, all sampled from
/// closed forms (phi need not be periodic; only phi u matters).
struct KatoWeight {
    Field phi;
    Field d1;
    Field d3;

    static KatoWeight constant(const Grid& grid, double value = 1.0);
    /// phi = <x>^p.
    static KatoWeight bracket(const Grid& grid, double p);
};

/// Residual of the weighted-energy identity for gKdV at every interior
/// snapshot i:
///   (Q_{i+1} - Q_{i-1}) / (2 dt) + 3 int u_x^2 phi' - int u^2 phi'''
///     - (2 c/(k+2)) int u^{k+2} phi',   Q = int u^2 phi,
/// c the nonlinear coefficient of the trajectory. Needs >= 3 equally spaced
/// snapshots.
std::vector<double> kato_residual(const Trajectory& traj, const KatoWeight& phi, int k);

/// Magnitude scale of the identity's terms, max over interior snapshots of
/// |dQ/dt| + 3|int u_x^2 phi'| + |int u^2 phi'''| + |nonlinear term|.
double kato_scale(const Trajectory& traj, const KatoWeight& phi, int k);

/// int x^j f.
cplx moment(const Field& f, int j);

} // namespace dispersive
