#include "levyexit/csv.hpp"

#include "levyexit/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace levyexit {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void meta(std::ostringstream& out, const std::string& key, const std::string& value) {
    out << "# " << key << '=' << value << '\n';
}

std::string domain_text(const Interval& domain) {
    return "(" + num(domain.a) + "," + num(domain.b) + ")";
}

void problem_meta(std::ostringstream& out, const ProblemSpec& p) {
    meta(out, "alpha", num(p.alpha));
    meta(out, "eps", num(p.eps));
    meta(out, "d", num(p.d));
    meta(out, "drift", drift_to_string(p.drift));
    meta(out, "domain", domain_text(p.domain));
    meta(out, "kind", to_string(p.kind));
}

double resolution_of(const Grid& grid) {
    return static_cast<double>(grid.n_cells) / (grid.b - grid.a);
}

} // namespace

std::string format_csv(const SolutionProfile& profile) {
    std::ostringstream out;
    problem_meta(out, profile.problem);
    meta(out, "scheme", to_string(profile.scheme));
    meta(out, "J", num(resolution_of(profile.grid)));
    meta(out, "n_cells", std::to_string(profile.grid.n_cells));
    meta(out, "one_sided", profile.one_sided ? "on" : "off");
    meta(out, "solver", to_string(profile.solver_stats.method));
    meta(out, "iterations", std::to_string(profile.solver_stats.iterations));
    meta(out, "residual", num(profile.solver_stats.residual));
    out << "x,value\n";
    for (std::size_t j = 0; j < profile.values.size(); ++j) {
        out << num(profile.grid.nodes[j]) << ',' << num(profile.values[j]) << '\n';
    }
    return out.str();
}

std::string format_csv(const std::vector<ConvergenceReport>& reports) {
    if (reports.empty()) {
        throw Error(ErrorCode::LengthMismatch, "no reports to write");
    }
    std::ostringstream out;
    const bool many = reports.size() > 1;
    meta(out, "study", reports.front().study);
    meta(out, "reference", reports.front().reference);
    meta(out, "probe", num(reports.front().probe_point));
    for (const auto& r : reports) {
        meta(out, many ? "slope[alpha:" + num(r.alpha) + "]" : "slope", num(r.fitted_slope));
    }
    if (!many) {
        meta(out, "alpha", num(reports.front().alpha));
    }
    out << (many ? "alpha," : "") << reports.front().abscissa_name << ",error\n";
    for (const auto& r : reports) {
        for (std::size_t i = 0; i < r.errors.size(); ++i) {
            if (many) {
                out << num(r.alpha) << ',';
            }
            out << num(r.abscissa[i]) << ',' << num(r.errors[i]) << '\n';
        }
    }
    return out.str();
}

std::string format_csv(const std::vector<SweepCell>& cells) {
    std::ostringstream out;
    meta(out, "cells", std::to_string(cells.size()));
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!cells[i].profile) {
            meta(out, "failed[" + std::to_string(i) + "]", cells[i].error);
        }
    }
    if (!cells.empty()) {
        meta(out, "drift", drift_to_string(cells.front().problem.drift));
        meta(out, "kind", to_string(cells.front().problem.kind));
        for (const auto& c : cells) {
            if (c.profile) {
                meta(out, "scheme", to_string(c.profile->scheme));
                meta(out, "solver", to_string(c.profile->solver_stats.method));
                break;
            }
        }
    }
    out << "cell,alpha,eps,d,a,b,J,x,value\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!cells[i].profile) {
            continue;
        }
        const SolutionProfile& p = *cells[i].profile;
        const std::string prefix = std::to_string(i) + ',' + num(p.problem.alpha) + ',' +
                                   num(p.problem.eps) + ',' + num(p.problem.d) + ',' +
                                   num(p.problem.domain.a) + ',' + num(p.problem.domain.b) + ',' +
                                   std::to_string(cells[i].resolution) + ',';
        for (std::size_t j = 0; j < p.values.size(); ++j) {
            out << prefix << num(p.grid.nodes[j]) << ',' << num(p.values[j]) << '\n';
        }
    }
    return out.str();
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
    }
}

const std::string& CsvTable::meta(const std::string& key) const {
    for (const auto& [k, v] : metadata) {
        if (k == key) {
            return v;
        }
    }
    throw Error(ErrorCode::ConfigError, "no metadata key '" + key + "'");
}

std::vector<double> CsvTable::column(const std::string& name) const {
    std::size_t idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            idx = i;
        }
    }
    if (idx == header.size()) {
        throw Error(ErrorCode::ConfigError, "no column '" + name + "'");
    }
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        out.push_back(std::stod(row.at(idx)));
    }
    return out;
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> fields;
        std::stringstream ss(s);
        std::string f;
        while (std::getline(ss, f, ',')) {
            fields.push_back(f);
        }
        return fields;
    };
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq != std::string::npos) {
                table.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            }
        } else if (table.header.empty()) {
            table.header = split(line);
        } else if (!line.empty()) {
            table.rows.push_back(split(line));
        }
    }
    return table;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

} // namespace levyexit
