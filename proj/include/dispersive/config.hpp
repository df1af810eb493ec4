#pragma once

#include "dispersive/checks.hpp"
#include "dispersive/equation.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dispersive {

/// Parse failure with the 1-based line and column of the offending text.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string source, std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    /// The message without the source position.
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

enum class Command { solve, check, sweep };
std::string command_name(Command c);

struct InitialData {
    /// gaussian: amplitude exp(-((x - center)/width)^2)
    /// sech2:    amplitude sech^2((x - center)/width)
    /// packet:   gaussian times cos(wavenumber x)
    std::string shape = "gaussian";
    double amplitude = 1.0;
    double width = 1.0;
    double center = 0.0;
    double wavenumber = 0.0;
    bool operator==(const InitialData&) const = default;
};

/// Flat `key = value` configuration. Every key has a default, so the canonical
/// echo (`to_text`) lists all of them and re-parses to an equal RunConfig.
struct RunConfig {
    Command command = Command::solve;

    Model model = Model::nls;
    double a = 3.0;
    int mu = 1;
    int k = 1;
    double nonlinear = 1.0;

    std::size_t n = 1024;
    double L = 20.0;

    double dt = 1e-3;
    double T = 1.0;
    double dealias = 2.0 / 3.0;
    std::vector<double> snapshots;

    InitialData initial;

    /// Diagnostic columns of a solve run, in order.
    std::vector<std::string> diagnostics = {"mass", "Hs_norm", "weighted_m_norm"};
    double diag_s = 1.0;
    double diag_m = 1.0;

    std::string check_id;
    /// check.<name> = v1, v2, ...; a sweep runs the Cartesian product.
    std::map<std::string, std::vector<double>> check_params;
    std::uint64_t seed = default_corpus_seed;
    std::size_t corpus_size = default_corpus_size;

    std::string trajectory_file = "trajectory.csv";
    std::string checks_file = "checks.csv";

    EquationSpec equation() const;
    StepperConfig stepper() const;
    std::string to_text() const;

    bool operator==(const RunConfig&) const = default;
};

/// Parses and validates. `source` names the input in error messages.
RunConfig parse_config(const std::string& text, const std::string& source = "config");
RunConfig load_config(const std::string& path);

/// Applies DISPERSIVE_SEED if set.
void apply_environment(RunConfig& cfg);

/// Diagnostic names a solve run accepts for the model.
std::vector<std::string> available_diagnostics(Model model);

} // namespace dispersive
