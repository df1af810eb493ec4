#pragma once

#include "dispersive/checks.hpp"
#include "dispersive/equation.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace dispersive {

/// %.17g: shortest form that round-trips every double.
std::string format_double(double v);

/// RFC-4180 field quoting (only when the field holds a comma, quote or newline).
std::string csv_field(const std::string& s);

/// `t,<diagnostic names>` header and one row per snapshot.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

/// check_id,params,worst_ratio,fitted_constant,residual_max,verdict; params
/// rendered as `name=value` pairs joined by ';'.
void write_checks_csv(const std::filesystem::path& path, const std::vector<CheckReport>& reports);

/// One gnuplot-ready `<name>.dat` file (t value) per diagnostic column.
void write_norm_curves(const std::filesystem::path& dir, const Trajectory& traj);

/// Human-readable notes of each report, one block per report.
void write_notes(const std::filesystem::path& path, const std::vector<CheckReport>& reports);

} // namespace dispersive
