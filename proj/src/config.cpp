#include "levyexit/config.hpp"

#include "levyexit/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace levyexit {

std::string to_string(OneSided mode) {
    switch (mode) {
    case OneSided::Auto: return "auto";
    case OneSided::On: return "on";
    case OneSided::Off: return "off";
    }
    return "auto";
}

std::string to_string(StudyKind study) {
    switch (study) {
    case StudyKind::Operator: return "operator";
    case StudyKind::PunchedHole: return "punched_hole";
    case StudyKind::Corrected: return "corrected";
    }
    return "operator";
}

std::string to_string(ErrorNorm norm) { return norm == ErrorNorm::Point ? "point" : "sup"; }

OneSided parse_one_sided(const std::string& text) {
    if (text == "auto") {
        return OneSided::Auto;
    }
    if (text == "on" || text == "true" || text == "1") {
        return OneSided::On;
    }
    if (text == "off" || text == "false" || text == "0") {
        return OneSided::Off;
    }
    throw Error(ErrorCode::ConfigError, "one_sided must be auto, on or off, got '" + text + "'");
}

StudyKind parse_study(const std::string& text) {
    if (text == "operator") {
        return StudyKind::Operator;
    }
    if (text == "punched_hole") {
        return StudyKind::PunchedHole;
    }
    if (text == "corrected") {
        return StudyKind::Corrected;
    }
    throw Error(ErrorCode::ConfigError, "unknown study '" + text + "'");
}

ErrorNorm parse_error_norm(const std::string& text) {
    if (text == "point") {
        return ErrorNorm::Point;
    }
    if (text == "sup") {
        return ErrorNorm::Sup;
    }
    throw Error(ErrorCode::ConfigError, "error_norm must be point or sup, got '" + text + "'");
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    T value{};
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || end != t.data() + t.size() || t.empty()) {
        throw Error(ErrorCode::ConfigError, "bad value for '" + key + "': '" + text + "'");
    }
    return value;
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
    std::vector<T> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(parse_number<T>(key, item));
    }
    if (out.empty()) {
        throw Error(ErrorCode::ConfigError, "empty list for '" + key + "'");
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "on" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "off" || text == "no") {
        return false;
    }
    throw Error(ErrorCode::ConfigError, "bad boolean for '" + key + "': '" + text + "'");
}

ProblemKind parse_kind(const std::string& text) {
    if (text == "exit_time") {
        return ProblemKind::ExitTime;
    }
    if (text == "escape_right") {
        return ProblemKind::EscapeRight;
    }
    if (text == "escape_left") {
        return ProblemKind::EscapeLeft;
    }
    throw Error(ErrorCode::ConfigError, "unknown kind '" + text + "'");
}

} // namespace

void apply_setting(ExperimentConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    try {
        if (key == "alpha") {
            cfg.alpha = parse_list<double>(key, value);
        } else if (key == "eps") {
            cfg.eps = parse_list<double>(key, value);
        } else if (key == "d") {
            cfg.d = parse_list<double>(key, value);
        } else if (key == "a") {
            cfg.a = parse_list<double>(key, value);
        } else if (key == "b") {
            cfg.b = parse_list<double>(key, value);
        } else if (key == "symmetric") {
            cfg.symmetric = parse_bool(key, value);
        } else if (key == "drift") {
            cfg.drift = parse_drift(value);
        } else if (key == "kind") {
            cfg.kind = parse_kind(value);
        } else if (key == "scheme") {
            cfg.scheme = parse_scheme(value);
        } else if (key == "solver") {
            cfg.solver.method = parse_solve_method(value);
        } else if (key == "gmres_restart") {
            cfg.solver.gmres_restart = parse_number<int>(key, value);
        } else if (key == "rel_tol") {
            cfg.solver.rel_tol = parse_number<double>(key, value);
        } else if (key == "max_iter") {
            cfg.solver.max_iter = parse_number<int>(key, value);
        } else if (key == "jacobi") {
            cfg.solver.jacobi = parse_bool(key, value);
        } else if (key == "one_sided") {
            cfg.one_sided = parse_one_sided(value);
        } else if (key == "J") {
            cfg.resolutions = parse_list<int>(key, value);
        } else if (key == "probe") {
            cfg.probe = parse_number<double>(key, value);
        } else if (key == "study") {
            cfg.study = parse_study(value);
        } else if (key == "error_norm") {
            cfg.error_norm = parse_error_norm(value);
        } else if (key == "x0") {
            cfg.x0 = parse_number<double>(key, value);
        } else if (key == "dt") {
            cfg.dt = parse_number<double>(key, value);
        } else if (key == "n_paths") {
            cfg.n_paths = parse_number<long>(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "max_steps") {
            cfg.max_steps = parse_number<long long>(key, value);
        } else if (key == "output") {
            cfg.output = value;
        } else {
            throw Error(ErrorCode::ConfigError, "unknown key '" + key + "'");
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) {
            throw;
        }
        throw Error(ErrorCode::ConfigError, "key '" + key + "': " + e.what());
    }
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::stringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::ConfigError,
                        "line " + std::to_string(line_no) + ": expected key = value");
        }
        apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read config '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

ProblemSpec make_problem(const ExperimentConfig& cfg, double alpha, double eps, double d, double a,
                         double b) {
    ProblemSpec p;
    p.alpha = alpha;
    p.eps = eps;
    p.d = d;
    p.drift = cfg.drift;
    p.domain = {cfg.symmetric ? -b : a, b};
    p.kind = cfg.kind;
    if (alpha == 2.0 && eps > 0.0) {
        p.d = d + 2.0 * eps;
        p.eps = 0.0;
    }
    return p;
}

ProblemSpec first_problem(const ExperimentConfig& cfg) {
    return make_problem(cfg, cfg.alpha.front(), cfg.eps.front(), cfg.d.front(), cfg.a.front(),
                        cfg.b.front());
}

} // namespace levyexit
