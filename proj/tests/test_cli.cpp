#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "latmeas/cli.hpp"

using latmeas::run_cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("latmeas_test_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int value = 0;
        return value;
    }
};

std::string write_file(const fs::path& dir, const std::string& name, const std::string& content) {
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
}

const char* kGoodModel = R"({"powerset": ["p", "q"], "complement": [3, 2, 1, 0],
                             "measure": {"{}": "0", "{p}": "2", "{q}": "3", "{p,q}": "5"}})";
const char* kBadMeasure = R"({"powerset": ["p", "q"], "complement": [3, 2, 1, 0],
                              "measure": {"{}": "0", "{p}": "1", "{q}": "-2", "{p,q}": "-1"}})";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("validate passes a good model") {
    TempDir dir;
    const std::string path = write_file(dir.path, "good.json", kGoodModel);
    CliResult r = cli({"validate", path});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);

    CliResult j = cli({"validate", path, "--json"});
    CHECK(j.exit_code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["profile"]["accepted"] == true);
}

TEST_CASE("decompose reports the failing clause with its witness pair") {
    TempDir dir;
    const std::string path = write_file(dir.path, "bad.json", kBadMeasure);
    CliResult r = cli({"decompose", path});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("(2b)") != std::string::npos);
    CHECK(r.out.find("{q}") != std::string::npos);
    CHECK(r.out.find("{p,q}") != std::string::npos);

    CliResult j = cli({"decompose", path, "--json"});
    CHECK(j.exit_code == 1);
    json doc = json::parse(j.out);
    CHECK(doc["pass"] == false);
    CHECK(doc["measure_clauses"]["antitone"]["ok"] == false);
    CHECK(doc["measure_clauses"]["antitone"]["witness"] == json::array({2, 3}));
}

TEST_CASE("decompose succeeds on the good model") {
    TempDir dir;
    const std::string path = write_file(dir.path, "good.json", kGoodModel);
    CliResult r = cli({"decompose", path, "--json"});
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["decomposition"]["a"] == 3);
    CHECK(doc["decomposition"]["b"] == 0);
    CHECK(doc["decomposition"]["lambda"] == "5");
    CHECK(doc["decomposition"]["cover_ok"] == true);
}

TEST_CASE("sigma prints members with names") {
    TempDir dir;
    const std::string path = write_file(
        dir.path, "gen.json",
        R"({"powerset": ["p", "q"], "complement": [3, 2, 1, 0], "generators": ["{p}"]})");
    CliResult r = cli({"sigma", path});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("members (4)") != std::string::npos);
    CHECK(r.out.find("{p}") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(cli({"frobnicate"}).exit_code == 2);
    CHECK(cli({}).exit_code == 2);
    CHECK(cli({"validate", "/nonexistent.json"}).exit_code == 2);
    CHECK(cli({"search", "--require", "L9"}).exit_code == 2);

    TempDir dir;
    const std::string cyclic =
        write_file(dir.path, "cycle.json",
                   R"({"names": ["a", "b"], "covers": [[0, 1], [1, 0]], "complement": [1, 0]})");
    CHECK(cli({"validate", cyclic}).exit_code == 2);

    const std::string no_measure = write_file(
        dir.path, "nomeasure.json", R"({"powerset": ["p"], "complement": [1, 0]})");
    CHECK(cli({"decompose", no_measure}).exit_code == 2);
}

TEST_CASE("validate flags a profile failure with exit 1") {
    TempDir dir;
    const std::string identity_complement = write_file(
        dir.path, "identity.json", R"({"powerset": ["p"], "complement": [0, 1]})");
    CliResult r = cli({"validate", identity_complement});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("REJECTED") != std::string::npos);
}

TEST_CASE("search persists findings and report re-validates them") {
    TempDir dir;
    const std::string out_dir = (dir.path / "run").string();
    CliResult search = cli({"search", "--max-size", "4", "--require", "L5,L7,L8",
                            "--pool", "-1,0,1", "--seed", "7", "--out", out_dir});
    CHECK(search.exit_code == 0);
    CHECK(fs::exists(fs::path(out_dir) / "summary.json"));

    json summary = json::parse(std::ifstream(fs::path(out_dir) / "summary.json"));
    CHECK(summary["counts"]["ModelFound"].get<int>() > 0);
    CHECK(summary["counts"]["ValidMeasureFound"].get<int>() > 0);
    CHECK(summary["counts"]["TheoremViolation"].get<int>() == 0);

    CliResult report = cli({"report", out_dir});
    CHECK(report.exit_code == 0);
    CHECK(report.out.find("result: PASS") != std::string::npos);

    // Corrupt one persisted model; report must notice.
    bool corrupted = false;
    for (const auto& entry : fs::directory_iterator(out_dir)) {
        if (entry.path().filename().string().rfind("model_", 0) == 0) {
            json doc = json::parse(std::ifstream(entry.path()));
            if (doc.contains("measure")) {
                for (auto& [key, value] : doc["measure"].items()) {
                    if (value.get<std::string>() == "0") continue;
                    value = "17";
                    corrupted = true;
                    break;
                }
            }
            if (corrupted) {
                std::ofstream(entry.path()) << doc.dump(2) << "\n";
                break;
            }
        }
    }
    REQUIRE(corrupted);
    CliResult mismatch = cli({"report", out_dir});
    CHECK(mismatch.exit_code == 1);
    CHECK(mismatch.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("search exits 0 on NoModelExists and prints the envelope") {
    CliResult r = cli({"search", "--max-size", "4", "--require", "L5,L7,L8", "--forbid", "L6"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("NoModelExists") != std::string::npos);

    CliResult j = cli({"search", "--max-size", "4", "--require", "L5,L7,L8", "--forbid", "L6", "--json"});
    json doc = json::parse(j.out);
    CHECK(doc["counts"]["NoModelExists"] == 1);
}

TEST_CASE("search --stress reports violations via the exit code") {
    CliResult r = cli({"search", "--max-size", "4", "--require", "L5,L7,L8",
                       "--pool", "0,1,2", "--stress"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("TheoremViolation=0") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    CliResult r = cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("validate") != std::string::npos);
}

} // TEST_SUITE
