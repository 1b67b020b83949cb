#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "ffq/cli/job.hpp"

namespace ffq::cli {

/// Exit status by outcome class.
enum ExitCode : int {
    kSuccess = 0,
    kInternal = 1,
    kParse = 2,
    kDomain = 3,
    kTolerance = 4,  ///< numerical target missed or an assertion in the job failed
};

using Cell = std::variant<double, long long, std::string>;

/// Tabular result of a job. Every command produces one.
struct Report {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    bool passed = true;
    std::vector<std::pair<std::string, Cell>> summary;  ///< extra scalar fields (JSON only)

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

/// CSV with a fixed header; floats as %.17g.
std::string to_csv(const Report& r);

/// {"command", "passed", "columns", "rows": [{column: value}], "summary": {...}}.
std::string to_json(const Report& r);

struct RunResult {
    int exit_code = kSuccess;
    std::string artifact;      ///< formatted report (also written to job.output when set)
    std::string error_record;  ///< JSON error object when exit_code != 0 and no report was produced
};

/// Computes the report for a job; throws library errors.
Report execute(const JobSpec& job);

/// execute + formatting + exit-code mapping; never throws.
RunResult run(const JobSpec& job);

/// {"error": {"kind", "message", "exit_code"[, "position"]}}.
std::string error_record(const std::string& kind, const std::string& message, int exit_code,
                         std::optional<std::size_t> position = std::nullopt);

/// Command-line entry point used by the ffq executable and by tests.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffq::cli
