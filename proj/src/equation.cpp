#include "dispersive/equation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dispersive {

EquationSpec EquationSpec::nls(double a, int mu) {
    EquationSpec s;
    s.model = Model::nls;
    s.a = a;
    s.mu = mu;
    s.validate();
    return s;
}

EquationSpec EquationSpec::gkdv(int k) {
    EquationSpec s;
    s.model = Model::gkdv;
    s.k = k;
    s.validate();
    return s;
}

EquationSpec EquationSpec::bo() {
    EquationSpec s;
    s.model = Model::bo;
    return s;
}

void EquationSpec::validate() const {
    if (!std::isfinite(nonlinear_coefficient)) throw std::invalid_argument("equation: nonlinear coefficient must be finite");
    switch (model) {
    case Model::nls:
        if (!(a > 1.0) || !std::isfinite(a)) throw std::invalid_argument("equation: NLS power a must satisfy a > 1");
        if (mu != 1 && mu != -1) throw std::invalid_argument("equation: NLS mu must be +1 or -1");
        break;
    case Model::gkdv:
        if (k < 1) throw std::invalid_argument("equation: gKdV k must be a positive integer, got " + std::to_string(k));
        break;
    case Model::bo:
        break;
    }
}

EquationSpec EquationSpec::linear_only() const {
    EquationSpec s = *this;
    s.nonlinear_coefficient = 0.0;
    return s;
}

double EquationSpec::critical_index() const {
    switch (model) {
    case Model::nls:
        return 0.5 - 2.0 / (a - 1.0);
    case Model::gkdv:
        if (k == 1) return -0.75;
        if (k == 2) return 0.25;
        if (k == 3) return -1.0 / 6.0;
        return (k - 4.0) / (2.0 * k);
    case Model::bo:
        return -0.5;
    }
    return 0.0;
}

std::string EquationSpec::name() const {
    std::ostringstream s;
    switch (model) {
    case Model::nls:
        s << "nls(a=" << a << ",mu=" << mu << ")";
        break;
    case Model::gkdv:
        s << "gkdv(k=" << k << ")";
        break;
    case Model::bo:
        s << "bo";
        break;
    }
    return s.str();
}

Model parse_model(const std::string& name) {
    if (name == "nls") return Model::nls;
    if (name == "gkdv") return Model::gkdv;
    if (name == "bo") return Model::bo;
    throw std::invalid_argument("unknown model '" + name + "' (expected nls, gkdv or bo)");
}

std::string model_name(Model m) {
    switch (m) {
    case Model::nls:
        return "nls";
    case Model::gkdv:
        return "gkdv";
    case Model::bo:
        return "bo";
    }
    return "";
}

void StepperConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("stepper: dt must be positive");
    if (!(dealias > 0.0 && dealias <= 1.0)) throw std::invalid_argument("stepper: dealias fraction must lie in (0, 1]");
}

const Grid& Trajectory::grid() const {
    if (snapshots.empty()) throw std::invalid_argument("trajectory: no snapshots");
    return snapshots.front().grid();
}

std::vector<double> Trajectory::diagnostic(const std::string& name) const {
    std::vector<double> out;
    for (std::size_t c = 0; c < diagnostic_names.size(); ++c) {
        if (diagnostic_names[c] != name) continue;
        for (const auto& row : diagnostics) out.push_back(row[c]);
    }
    return out;
}

} // namespace dispersive
