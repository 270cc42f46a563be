#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramanujan {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kArtifactVersion = "ramanujan-tools 1.0.0";

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Machine-readable verification report.  Serialization is deterministic:
// fixed key order, no timestamps, '\n'-terminated, so identical inputs give
// byte-identical files.
struct Report {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> inputs; // flag, value
    std::vector<CheckResult> checks;
    std::string data_json; // optional JSON object with subcommand payload

    void add_input(const std::string& flag, const std::string& value);
    void add_check(const std::string& name, bool pass, const std::string& detail = "");
    bool all_pass() const;
    std::size_t failed() const;

    // JSON document; validates the schema first and throws std::logic_error
    // on a malformed report (empty subcommand, empty or duplicate check
    // names).
    std::string to_json() const;

    // Human-readable lines for stderr: one [PASS]/[FAIL] line per check plus
    // a tally.
    std::string summary() const;
};

// FNV-1a 64-bit digest of text, rendered "fnv1a64:<16 hex digits>".
std::string fnv1a64(const std::string& text);

// Report directory from the RAMANUJAN_REPORT_DIR environment variable, or
// nullopt when unset/empty.
std::optional<std::string> report_directory();

// Write report under dir (created if needed) as <subcommand>-report.json and
// return the full path.
std::string write_report(const Report& report, const std::string& dir);

} // namespace ramanujan
