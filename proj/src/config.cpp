#include "dispersive/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace dispersive {

ConfigError::ConfigError(std::string source, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

std::string command_name(Command c) {
    switch (c) {
    case Command::solve:
        return "solve";
    case Command::check:
        return "check";
    case Command::sweep:
        return "sweep";
    }
    return "";
}

EquationSpec RunConfig::equation() const {
    EquationSpec s;
    s.model = model;
    s.a = a;
    s.mu = mu;
    s.k = k;
    s.nonlinear_coefficient = nonlinear;
    return s;
}

StepperConfig RunConfig::stepper() const {
    StepperConfig c;
    c.dt = dt;
    c.dealias = dealias;
    return c;
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
    return s;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

std::vector<Token> split_list(const std::string& value, std::size_t column) {
    std::vector<Token> out;
    if (trim(value).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = value.find(',', start);
        const std::string part = value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto lead = part.find_first_not_of(" \t");
        out.push_back({trim(part), column + start + (lead == std::string::npos ? 0 : lead)});
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(std::size_t column, const std::string& msg) const { throw ConfigError(source_, line_, column, msg); }

    double number(const Token& t) const {
        double v = 0.0;
        const char* b = t.text.data();
        const char* e = b + t.text.size();
        auto res = std::from_chars(b, e, v);
        if (t.text.empty() || res.ec != std::errc() || res.ptr != e) fail(t.column, "expected a number, got '" + t.text + "'");
        if (!std::isfinite(v)) fail(t.column, "value must be finite");
        return v;
    }
    long integer(const Token& t) const {
        const double v = number(t);
        if (v != std::floor(v) || std::abs(v) > 1e15) fail(t.column, "expected an integer, got '" + t.text + "'");
        return static_cast<long>(v);
    }
    Token single(const std::vector<Token>& toks, std::size_t column) const {
        if (toks.size() != 1) fail(column, "expected exactly one value");
        return toks[0];
    }

    void line(std::size_t no) { line_ = no; }

private:
    std::string source_;
    std::size_t line_ = 0;
};

void validate(const RunConfig& c, const std::function<void(const std::string&, const std::string&)>& fail) {
    try {
        c.equation().validate();
    } catch (const std::invalid_argument& e) {
        fail(c.model == Model::gkdv ? "equation.k" : "equation.a", e.what());
    }
    try {
        Grid g(c.n, c.L);
    } catch (const std::invalid_argument& e) {
        fail("grid.n", e.what());
    }
    try {
        c.stepper().validate();
    } catch (const std::invalid_argument& e) {
        fail("stepper.dt", e.what());
    }
    if (!(c.T >= 0.0)) fail("stepper.T", "T must be >= 0");
    for (double t : c.snapshots) {
        if (!(t >= 0.0 && t <= c.T)) fail("stepper.snapshots", "snapshot time " + num(t) + " outside [0, T]");
    }
    const auto allowed = available_diagnostics(c.model);
    for (const auto& d : c.diagnostics) {
        if (std::find(allowed.begin(), allowed.end(), d) == allowed.end()) {
            fail("diagnostics.list", "diagnostic '" + d + "' not available for " + model_name(c.model) + " (available: " +
                                         join(allowed) + ")");
        }
    }
    if (c.initial.shape != "gaussian" && c.initial.shape != "sech2" && c.initial.shape != "packet") {
        fail("initial.shape", "shape must be gaussian, sech2 or packet");
    }
    if (!(c.initial.width > 0.0)) fail("initial.width", "width must be positive");
    if (c.command != Command::solve) {
        const auto names = check_names();
        if (std::find(names.begin(), names.end(), c.check_id) == names.end()) {
            fail("check.id", "unknown check '" + c.check_id + "' (known: " + join(names) + ")");
        }
        if (c.command == Command::check) {
            for (const auto& kv : c.check_params) {
                if (kv.second.size() != 1) fail("check." + kv.first, "a check run takes one value per parameter; use sweep for lists");
            }
        }
    }
    if (c.corpus_size == 0) fail("check.corpus_size", "corpus size must be positive");
}

} // namespace

std::vector<std::string> available_diagnostics(Model model) {
    std::vector<std::string> out;
    if (model == Model::nls) {
        out = {"mass", "energy"};
    } else {
        out = {"I1", "I2", "I3"};
    }
    for (const char* s : {"Hs_norm", "weighted_m_norm", "bracket_m_norm", "mean"}) out.emplace_back(s);
    if (model != Model::nls) out.insert(out.begin(), "mass");
    return out;
}

std::string RunConfig::to_text() const {
    std::ostringstream o;
    o << "command = " << command_name(command) << "\n";
    o << "equation.model = " << model_name(model) << "\n";
    o << "equation.a = " << num(a) << "\n";
    o << "equation.mu = " << mu << "\n";
    o << "equation.k = " << k << "\n";
    o << "equation.nonlinear = " << num(nonlinear) << "\n";
    o << "grid.n = " << n << "\n";
    o << "grid.L = " << num(L) << "\n";
    o << "stepper.dt = " << num(dt) << "\n";
    o << "stepper.T = " << num(T) << "\n";
    o << "stepper.dealias = " << num(dealias) << "\n";
    o << "stepper.snapshots = " << join(snapshots) << "\n";
    o << "initial.shape = " << initial.shape << "\n";
    o << "initial.amplitude = " << num(initial.amplitude) << "\n";
    o << "initial.width = " << num(initial.width) << "\n";
    o << "initial.center = " << num(initial.center) << "\n";
    o << "initial.wavenumber = " << num(initial.wavenumber) << "\n";
    o << "diagnostics.list = " << join(diagnostics) << "\n";
    o << "diagnostics.s = " << num(diag_s) << "\n";
    o << "diagnostics.m = " << num(diag_m) << "\n";
    o << "check.id = " << check_id << "\n";
    o << "check.seed = " << seed << "\n";
    o << "check.corpus_size = " << corpus_size << "\n";
    for (const auto& kv : check_params) o << "check." << kv.first << " = " << join(kv.second) << "\n";
    o << "output.trajectory = " << trajectory_file << "\n";
    o << "output.checks = " << checks_file << "\n";
    return o.str();
}

RunConfig parse_config(const std::string& text, const std::string& source) {
    RunConfig c;
    Parser p(source);
    std::map<std::string, std::size_t> key_line;
    std::map<std::string, std::size_t> key_column;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        p.line(line_no);
        const auto hash = raw.find('#');
        const std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
        if (trim(body).empty()) continue;
        const auto eq = body.find('=');
        const std::size_t key_col = body.find_first_not_of(" \t") + 1;
        if (eq == std::string::npos) p.fail(key_col, "expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        if (key.empty()) p.fail(key_col, "missing key before '='");
        if (key_line.count(key)) {
            p.fail(key_col, "duplicate key '" + key + "' (first set on line " + std::to_string(key_line[key]) + ")");
        }
        key_line[key] = line_no;
        key_column[key] = key_col;
        const std::string value_raw = body.substr(eq + 1);
        const auto lead = value_raw.find_first_not_of(" \t");
        const std::size_t value_col = eq + 2 + (lead == std::string::npos ? 0 : lead);
        const std::string value = trim(value_raw);
        const auto toks = split_list(value_raw, eq + 2);
        auto one = [&] { return p.single(toks, value_col); };
        auto word = [&] {
            const Token t = one();
            if (t.text.empty()) p.fail(t.column, "empty value for '" + key + "'");
            return t.text;
        };

        if (key == "command") {
            const std::string w = word();
            if (w == "solve") c.command = Command::solve;
            else if (w == "check") c.command = Command::check;
            else if (w == "sweep") c.command = Command::sweep;
            else p.fail(value_col, "command must be solve, check or sweep");
        } else if (key == "equation.model") {
            try {
                c.model = parse_model(word());
            } catch (const std::invalid_argument& e) {
                p.fail(value_col, e.what());
            }
        } else if (key == "equation.a") {
            c.a = p.number(one());
        } else if (key == "equation.mu") {
            c.mu = static_cast<int>(p.integer(one()));
        } else if (key == "equation.k") {
            const Token t = one();
            const long k = p.integer(t);
            if (k < 1) p.fail(t.column, "gKdV k must be a positive integer, got " + t.text);
            c.k = static_cast<int>(k);
        } else if (key == "equation.nonlinear") {
            c.nonlinear = p.number(one());
        } else if (key == "grid.n") {
            const Token t = one();
            const long n = p.integer(t);
            if (n < 8 || (n & (n - 1)) != 0) p.fail(t.column, "grid.n must be a power of two >= 8");
            c.n = static_cast<std::size_t>(n);
        } else if (key == "grid.L") {
            const Token t = one();
            c.L = p.number(t);
            if (!(c.L > 0.0)) p.fail(t.column, "grid.L must be positive");
        } else if (key == "stepper.dt") {
            const Token t = one();
            c.dt = p.number(t);
            if (!(c.dt > 0.0)) p.fail(t.column, "stepper.dt must be positive");
        } else if (key == "stepper.T") {
            const Token t = one();
            c.T = p.number(t);
            if (!(c.T >= 0.0)) p.fail(t.column, "stepper.T must be >= 0");
        } else if (key == "stepper.dealias") {
            const Token t = one();
            c.dealias = p.number(t);
            if (!(c.dealias > 0.0 && c.dealias <= 1.0)) p.fail(t.column, "stepper.dealias must lie in (0, 1]");
        } else if (key == "stepper.snapshots") {
            c.snapshots.clear();
            for (const Token& t : toks) c.snapshots.push_back(p.number(t));
        } else if (key == "initial.shape") {
            c.initial.shape = word();
        } else if (key == "initial.amplitude") {
            c.initial.amplitude = p.number(one());
        } else if (key == "initial.width") {
            c.initial.width = p.number(one());
        } else if (key == "initial.center") {
            c.initial.center = p.number(one());
        } else if (key == "initial.wavenumber") {
            c.initial.wavenumber = p.number(one());
        } else if (key == "diagnostics.list") {
            c.diagnostics.clear();
            for (const Token& t : toks) {
                if (t.text.empty()) p.fail(t.column, "empty diagnostic name");
                c.diagnostics.push_back(t.text);
            }
        } else if (key == "diagnostics.s") {
            c.diag_s = p.number(one());
        } else if (key == "diagnostics.m") {
            const Token t = one();
            c.diag_m = p.number(t);
            if (!(c.diag_m >= 0.0)) p.fail(t.column, "diagnostics.m must be >= 0");
        } else if (key == "check.id") {
            c.check_id = value;
        } else if (key == "check.seed") {
            const Token t = one();
            std::uint64_t seed = 0;
            const char* b = t.text.data();
            const char* e = b + t.text.size();
            const bool hex = t.text.size() > 2 && t.text[0] == '0' && (t.text[1] == 'x' || t.text[1] == 'X');
            auto res = std::from_chars(hex ? b + 2 : b, e, seed, hex ? 16 : 10);
            if (res.ec != std::errc() || res.ptr != e) p.fail(t.column, "check.seed must be an unsigned 64-bit integer");
            c.seed = seed;
        } else if (key == "check.corpus_size") {
            const Token t = one();
            const long v = p.integer(t);
            if (v < 1) p.fail(t.column, "check.corpus_size must be positive");
            c.corpus_size = static_cast<std::size_t>(v);
        } else if (key.rfind("check.", 0) == 0) {
            const std::string name = key.substr(6);
            if (name.empty() || name.find('.') != std::string::npos) p.fail(key_col, "malformed check parameter key '" + key + "'");
            std::vector<double> vals;
            for (const Token& t : toks) vals.push_back(p.number(t));
            if (vals.empty()) p.fail(value_col, "check parameter '" + name + "' needs a value");
            c.check_params[name] = vals;
        } else if (key == "output.trajectory") {
            c.trajectory_file = word();
        } else if (key == "output.checks") {
            c.checks_file = word();
        } else {
            p.fail(key_col, "unknown key '" + key + "'");
        }
    }
    validate(c, [&](const std::string& key, const std::string& msg) {
        const auto it = key_line.find(key);
        if (it == key_line.end()) throw ConfigError(source, 0, 0, msg);
        throw ConfigError(source, it->second, key_column[key], msg);
    });
    if (c.command != Command::solve) {
        const auto accepted = check_parameter_names(c.check_id);
        for (const auto& kv : c.check_params) {
            if (std::find(accepted.begin(), accepted.end(), kv.first) == accepted.end()) {
                const std::string key = "check." + kv.first;
                throw ConfigError(source, key_line[key], key_column[key],
                                  "check '" + c.check_id + "' has no parameter '" + kv.first + "' (accepted: " + join(accepted) + ")");
            }
        }
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

void apply_environment(RunConfig& cfg) {
    const char* s = std::getenv("DISPERSIVE_SEED");
    if (!s || !*s) return;
    RunConfig probe = parse_config(std::string("command = solve\ncheck.seed = ") + s + "\n", "DISPERSIVE_SEED");
    cfg.seed = probe.seed;
}

} // namespace dispersive
