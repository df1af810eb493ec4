#pragma once

#include "dispersive/equation.hpp"
#include "dispersive/field.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace dispersive {

/// Lambda(xi) with u_t = Lambda(D) u for the linear part:
/// NLS -i xi^2, gKdV i xi^3, BO -i xi |xi|.
cplx linear_symbol(const EquationSpec& spec, double xi);

/// Exact linear group U(t) = exp(t Lambda(D)); odd groups zero the Nyquist slot.
Field linear_group(const Field& f, const EquationSpec& spec, double t);

/// Nonlinear part N(u) of u_t = Lambda u + N(u), dealiased after evaluation:
/// NLS -i mu |u|^{a-1} u; gKdV -(u^{k+1})_x / (k+1); BO -(u^2)_x / 2.
Field nonlinear_term(const Field& u, const EquationSpec& spec, double dealias = 2.0 / 3.0);

/// One integrating-factor (Lawson) RK4 step of size cfg.dt. Throws
/// std::runtime_error if the result is not finite.
Field nonlinear_step(const Field& f, const EquationSpec& spec, const StepperConfig& cfg);

/// Named values computed from one snapshot.
using Diagnostics = std::vector<std::pair<std::string, double>>;
using DiagnosticHook = std::function<Diagnostics(double t, const Field& u)>;

/// Integrates from 0 to T. The step is shrunk to T / ceil(T / dt) so the run
/// ends exactly at T. Requested snapshot times are snapped to the nearest
/// step (noted in the warnings when they move); an empty list means {T}. A
/// non-finite state ends the run: the trajectory keeps the snapshots taken so
/// far and records the failure time.
Trajectory evolve(const Field& u0, const EquationSpec& spec, const StepperConfig& cfg, double T,
                  std::vector<double> snapshot_times, const DiagnosticHook& hook = {});

/// Snapshot times 0, T/count, ..., T.
std::vector<double> uniform_times(double T, std::size_t count);

} // namespace dispersive
