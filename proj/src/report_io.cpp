#include "dispersive/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dispersive {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

void close_checked(std::ofstream& out, const std::filesystem::path& path) {
    out.close();
    if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
}

} // namespace

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
    auto out = open_for_write(path);
    out << "t";
    for (const auto& name : traj.diagnostic_names) out << "," << csv_field(name);
    out << "\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        out << format_double(traj.times[i]);
        if (i < traj.diagnostics.size()) {
            for (double v : traj.diagnostics[i]) out << "," << format_double(v);
        }
        out << "\n";
    }
    close_checked(out, path);
}

void write_checks_csv(const std::filesystem::path& path, const std::vector<CheckReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("write_checks_csv: no reports");
    auto out = open_for_write(path);
    out << "check_id,params,worst_ratio,fitted_constant,residual_max,verdict\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& kv : r.params) params += (params.empty() ? "" : ";") + kv.first + "=" + format_double(kv.second);
        out << csv_field(r.check_id) << "," << csv_field(params) << "," << format_double(r.worst_ratio) << ","
            << format_double(r.fitted_constant) << "," << format_double(r.residual_max) << "," << verdict_name(r.verdict)
            << "\n";
    }
    close_checked(out, path);
}

void write_norm_curves(const std::filesystem::path& dir, const Trajectory& traj) {
    for (std::size_t c = 0; c < traj.diagnostic_names.size(); ++c) {
        const auto path = dir / (traj.diagnostic_names[c] + ".dat");
        auto out = open_for_write(path);
        out << "# t " << traj.diagnostic_names[c] << "\n";
        for (std::size_t i = 0; i < traj.diagnostics.size(); ++i) {
            out << format_double(traj.times[i]) << " " << format_double(traj.diagnostics[i][c]) << "\n";
        }
        close_checked(out, path);
    }
}

void write_notes(const std::filesystem::path& path, const std::vector<CheckReport>& reports) {
    auto out = open_for_write(path);
    for (const auto& r : reports) {
        out << r.check_id << " [" << verdict_name(r.verdict) << "]\n";
        out << "  trend:";
        for (double v : r.refinement_trend) out << " " << format_double(v);
        out << "\n";
        for (const auto& n : r.notes) out << "  " << n << "\n";
    }
    close_checked(out, path);
}

} // namespace dispersive
