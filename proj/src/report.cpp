#include "ramanujan/report.hpp"

#include "ramanujan/builtin_data.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ramanujan {

using ordered_json = nlohmann::ordered_json;

void Report::add_input(const std::string& flag, const std::string& value) {
    inputs.emplace_back(flag, value);
}

void Report::add_check(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
}

bool Report::all_pass() const { return failed() == 0; }

std::size_t Report::failed() const {
    std::size_t n = 0;
    for (const CheckResult& c : checks)
        if (!c.pass) ++n;
    return n;
}

namespace {

void validate_document(const ordered_json& doc) {
    if (!doc.at("schema").is_number_integer() || doc.at("schema").get<int>() != kReportSchema)
        throw std::logic_error("report: unsupported schema version");
    if (!doc.at("subcommand").is_string() || doc.at("subcommand").get<std::string>().empty())
        throw std::logic_error("report: missing subcommand");
    std::set<std::string> seen;
    for (const auto& c : doc.at("checks")) {
        std::string name = c.at("name").get<std::string>();
        if (name.empty()) throw std::logic_error("report: empty check name");
        if (!seen.insert(name).second)
            throw std::logic_error("report: duplicate check name '" + name + "'");
        std::string status = c.at("status").get<std::string>();
        if (status != "pass" && status != "fail")
            throw std::logic_error("report: bad status '" + status + "'");
    }
    doc.at("versions").at("artifact").get<std::string>();
}

} // namespace

std::string Report::to_json() const {
    ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["subcommand"] = subcommand;
    ordered_json in = ordered_json::object();
    for (const auto& [flag, value] : inputs) in[flag] = value;
    doc["inputs"] = std::move(in);
    ordered_json list = ordered_json::array();
    for (const CheckResult& c : checks) {
        ordered_json entry;
        entry["name"] = c.name;
        entry["status"] = c.pass ? "pass" : "fail";
        entry["detail"] = c.detail;
        list.push_back(std::move(entry));
    }
    doc["checks"] = std::move(list);
    if (!data_json.empty()) {
        ordered_json payload = ordered_json::parse(data_json, nullptr, false);
        if (payload.is_discarded() || !payload.is_object())
            throw std::logic_error("report: data_json must be a JSON object");
        doc["data"] = std::move(payload);
    }
    doc["summary"] = {{"total", checks.size()}, {"failed", failed()}};
    doc["versions"] = {{"artifact", kArtifactVersion},
                       {"data/connection_matrices.txt", fnv1a64(connection_data_text())}};
    validate_document(doc);
    return doc.dump(2) + "\n";
}

std::string Report::summary() const {
    std::ostringstream os;
    for (const CheckResult& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
    }
    os << subcommand << ": " << checks.size() << " checks, " << failed() << " failed\n";
    return os.str();
}

std::string fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : text) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<std::string> report_directory() {
    const char* dir = std::getenv("RAMANUJAN_REPORT_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::string(dir);
}

std::string write_report(const Report& report, const std::string& dir) {
    std::string body = report.to_json(); // validate before touching the disk
    std::filesystem::create_directories(dir);
    std::filesystem::path path = std::filesystem::path(dir) / (report.subcommand + "-report.json");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("report: cannot write " + path.string());
    out << body;
    return path.string();
}

} // namespace ramanujan
