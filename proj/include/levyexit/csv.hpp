#pragma once

#include "levyexit/harness.hpp"
#include "levyexit/profile.hpp"

#include <map>
#include <string>
#include <vector>

namespace levyexit {

/// "# key=value" metadata, then "x,value" rows with 17 significant digits.
std::string format_csv(const SolutionProfile& profile);
/// "<J or eps>,error" rows (plus an alpha column when several reports are
/// given); the fitted slopes go into the metadata.
std::string format_csv(const std::vector<ConvergenceReport>& reports);
/// Long format: one row per (cell, node); failed cells appear in the metadata.
std::string format_csv(const std::vector<SweepCell>& cells);

/// Writes the text to path, or throws ErrorCode::IoError.
void write_text(const std::string& text, const std::string& path);

template <class T>
void write_csv(const T& result, const std::string& path) {
    write_text(format_csv(result), path);
}

struct CsvTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// First metadata value stored under key; throws ConfigError if missing.
    const std::string& meta(const std::string& key) const;
    std::vector<double> column(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::string& path);

} // namespace levyexit
