#include <cli.hpp>
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "adsvol");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = adsvol::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ADSVOL_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("classify") {
    auto r = run({"classify", data("cylinder.json")});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "good");
    CHECK(j["schema_version"] == 1);
    CHECK(run({"classify", data("lightcone.json")}).code == 3);
}

TEST_CASE("ambient 4 volume follows the eps schedule") {
    auto r = run({"--eps-steps", "3", "--eps0", "0.2", "volume", data("cylinder4.json")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["eps_steps"] == 3);
    CHECK(std::abs(j["re"].get<double>() - 4.0 * M_PI / 3.0 * std::acosh(2.0)) < 0.05);
}

TEST_CASE("volume report and csv") {
    const auto csv = (std::filesystem::temp_directory_path() / "adsvol_b.csv").string();
    auto r = run({"volume", data("cylinder.json"), "--csv", csv, "--samples", "16"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["im"].get<double>() == doctest::Approx(-4.137345254066));
    for (const char* key : {"config", "re", "abs_err", "breakpoints", "upper", "lower", "runtime_s"}) CHECK(j.contains(key));
    std::ifstream f(csv);
    std::string line;
    int lines = 0;
    while (std::getline(f, line)) ++lines;
    CHECK(lines == 17);
    CHECK(run({"--format", "csv", "volume", data("cylinder.json")}).out.rfind("re,im", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"volume", data("lightcone.json")}).code == 3);
    CHECK(run({"oracle", "--force", data("lightcone.json")}).code == 6);
    CHECK(run({"volume", "/nonexistent.json"}).code == 2);
    CHECK(run({"--bogus", "volume", data("cylinder.json")}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--eps-ratio", "1.5", "oracle", data("cylinder.json")}).code == 2);
    CHECK(run({"--format", "xml", "volume", data("cylinder.json")}).code == 2);
}

TEST_CASE("environment overrides") {
    ::setenv("ADSVOL_EPS_STEPS", "2", 1);
    const int code = run({"oracle", data("cylinder.json")}).code;
    ::unsetenv("ADSVOL_EPS_STEPS");
    CHECK(code == 2);
}

TEST_CASE("boundary volume methods agree") {
    auto r = run({"boundary-volume", data("conic_polygon.json")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["discrepancy"].get<double>() < 1e-6);
    CHECK(j["results"].size() == 2);
    CHECK(run({"boundary-volume", "--method", "polygon", data("square_polygon.json")}).code == 0);
}

TEST_CASE("invariance is deterministic") {
    auto a = run({"--seed", "3", "invariance", data("cylinder.json"), "--random", "2", "--word",
                  data("word_translate_invert.json")});
    auto b = run({"--seed", "3", "invariance", data("cylinder.json"), "--random", "2", "--word",
                  data("word_translate_invert.json")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["all_pass"] == true);
}

TEST_CASE("oracle comparison") {
    auto r = run({"oracle", "--compare", data("cylinder.json")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["converged"] == true);
    CHECK(j["difference"].get<double>() <= j["combined_err"].get<double>());
}
