#include "doctest.h"

#include "ramanujan/builtin_data.hpp"
#include "ramanujan/report.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace ramanujan;

namespace {

Report sample_report() {
    Report r;
    r.subcommand = "flow";
    r.add_input("chart", "e");
    r.add_input("q0", "0.01");
    r.add_check("endpoint-vs-series", true, "max_abs_err=3e-11");
    r.add_check("step-budget", false, "exhausted");
    return r;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("fnv1a64 published vectors") {
    CHECK(fnv1a64("") == "fnv1a64:cbf29ce484222325");
    CHECK(fnv1a64("a") == "fnv1a64:af63dc4c8601ec8c");
    CHECK(fnv1a64("foobar") == "fnv1a64:85944171f73967e8");
}

TEST_CASE("json is deterministic and newline-terminated") {
    std::string one = sample_report().to_json();
    std::string two = sample_report().to_json();
    CHECK(one == two);
    CHECK(!one.empty());
    CHECK(one.back() == '\n');
    CHECK(one.find("timestamp") == std::string::npos);
}

TEST_CASE("document shape and key order") {
    auto doc = nlohmann::ordered_json::parse(sample_report().to_json());
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema", "subcommand", "inputs", "checks", "summary",
                                           "versions"});
    CHECK(doc["schema"] == kReportSchema);
    CHECK(doc["subcommand"] == "flow");
    CHECK(doc["inputs"]["chart"] == "e");
    CHECK(doc["checks"].size() == 2);
    CHECK(doc["checks"][0]["name"] == "endpoint-vs-series");
    CHECK(doc["checks"][0]["status"] == "pass");
    CHECK(doc["checks"][1]["status"] == "fail");
    CHECK(doc["checks"][1]["detail"] == "exhausted");
    CHECK(doc["summary"]["total"] == 2);
    CHECK(doc["summary"]["failed"] == 1);
    CHECK(doc["versions"]["artifact"] == kArtifactVersion);
    CHECK(doc["versions"]["data/connection_matrices.txt"] ==
          fnv1a64(connection_data_text()));
}

TEST_CASE("pass tally and human summary") {
    Report r = sample_report();
    CHECK(!r.all_pass());
    CHECK(r.failed() == 1);
    std::string text = r.summary();
    CHECK(text.find("[PASS] endpoint-vs-series: max_abs_err=3e-11\n") != std::string::npos);
    CHECK(text.find("[FAIL] step-budget") != std::string::npos);
    CHECK(text.find("flow: 2 checks, 1 failed\n") != std::string::npos);

    Report ok;
    ok.subcommand = "all";
    ok.add_check("only", true);
    CHECK(ok.all_pass());
    CHECK(ok.summary().find("[PASS] only\n") != std::string::npos);
}

TEST_CASE("optional data payload") {
    Report r = sample_report();
    r.data_json = R"({"endpoint": [[1.0, 0.0]], "steps": 12})";
    auto doc = nlohmann::ordered_json::parse(r.to_json());
    CHECK(doc["data"]["steps"] == 12);
    CHECK(doc["data"]["endpoint"][0][0] == 1.0);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema", "subcommand", "inputs", "checks", "data",
                                           "summary", "versions"});

    r.data_json = "[1, 2]"; // not an object
    CHECK_THROWS_AS(r.to_json(), std::logic_error);
    r.data_json = "{broken";
    CHECK_THROWS_AS(r.to_json(), std::logic_error);
}

TEST_CASE("validation rejects malformed reports") {
    Report r;
    CHECK_THROWS_AS(r.to_json(), std::logic_error); // no subcommand
    r.subcommand = "flow";
    r.add_check("", true);
    CHECK_THROWS_AS(r.to_json(), std::logic_error); // empty name
    r.checks.clear();
    r.add_check("dup", true);
    r.add_check("dup", false);
    CHECK_THROWS_AS(r.to_json(), std::logic_error); // duplicate name
}

TEST_CASE("report directory from the environment") {
    unsetenv("RAMANUJAN_REPORT_DIR");
    CHECK(!report_directory().has_value());
    setenv("RAMANUJAN_REPORT_DIR", "", 1);
    CHECK(!report_directory().has_value());
    setenv("RAMANUJAN_REPORT_DIR", "/tmp/reports", 1);
    REQUIRE(report_directory().has_value());
    CHECK(*report_directory() == "/tmp/reports");
    unsetenv("RAMANUJAN_REPORT_DIR");
}

TEST_CASE("write_report creates the directory and file") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ramanujan-report-test" / "nested";
    fs::remove_all(dir.parent_path());
    Report r = sample_report();
    std::string path = write_report(r, dir.string());
    CHECK(path == (dir / "flow-report.json").string());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == r.to_json());
    fs::remove_all(dir.parent_path());
}

} // TEST_SUITE
