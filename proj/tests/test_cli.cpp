#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "patmine/bundled.hpp"
#include "patmine/commands.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace patmine;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kFixtures = PATMINE_FIXTURE_DIR;

// Fresh per-case output directory under the build tree.
fs::path out_dir(const std::string& name) {
    const fs::path dir = fs::path("cli_out") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json slurp_json(const fs::path& path) { return json::parse(slurp(path)); }

} // namespace

TEST_CASE("count --bundled reproduces the reference table byte for byte") {
    const fs::path dir = out_dir("count_bundled");
    RunConfig c;
    c.command = "count";
    c.bundled = true;
    c.out = dir.string();
    CHECK(run_command(c) == 0);
    CHECK(slurp(dir / "counts.csv") == bundled::table_s2_text());
    const json j = slurp_json(dir / "counts.json");
    CHECK(j["mode"] == "bundled");
    CHECK(j["n_domains"] == 28);
}

TEST_CASE("correlate --bundled reports the headline correlation") {
    const fs::path dir = out_dir("correlate_bundled");
    RunConfig c;
    c.command = "correlate";
    c.bundled = true;
    c.out = dir.string();
    CHECK(run_command(c) == 0);
    const json j = slurp_json(dir / "correlation.json");
    CHECK(j["n"] == 27);
    const double r = j["r"];
    CHECK(r > 0.54);
    CHECK(r < 0.58);
    const double p = j["p"];
    CHECK(p > 0.001);
    CHECK(p < 0.004);
    CHECK(double(j["trend_slope"]) > 0.0);
    // csv carries the same numbers at 6 decimals
    const std::string csv = slurp(dir / "correlation.csv");
    CHECK(csv.rfind("r,n,p,", 0) == 0);
    CHECK(csv.find(",27,") != std::string::npos);
}

TEST_CASE("dropping the exclusion keeps all 28 domains") {
    const fs::path dir = out_dir("correlate_all");
    RunConfig c;
    c.command = "correlate";
    c.bundled = true;
    c.exclusions.clear();
    c.out = dir.string();
    CHECK(run_command(c) == 0);
    const json j = slurp_json(dir / "correlation.json");
    CHECK(j["n"] == 28);
    const double r = j["r"];
    CHECK(std::fabs(r) <= 1.0);
}

TEST_CASE("svg output is produced on request") {
    const fs::path dir = out_dir("correlate_svg");
    RunConfig c;
    c.command = "correlate";
    c.bundled = true;
    c.formats = {"svg"};
    c.out = dir.string();
    CHECK(run_command(c) == 0);
    const std::string svg = slurp(dir / "correlation.svg");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(!fs::exists(dir / "correlation.csv"));
    CHECK(!fs::exists(dir / "correlation.json"));
}

TEST_CASE("robustness output is byte-identical across reruns") {
    RunConfig c;
    c.command = "robustness";
    c.bundled = true;
    const fs::path a = out_dir("robustness_a");
    c.out = a.string();
    CHECK(run_command(c) == 0);
    const fs::path b = out_dir("robustness_b");
    c.out = b.string();
    CHECK(run_command(c) == 0);
    CHECK(slurp(a / "robustness.csv") == slurp(b / "robustness.csv"));
    CHECK(slurp(a / "robustness.json") == slurp(b / "robustness.json"));

    const json j = slurp_json(a / "robustness.json");
    CHECK(j["group_size"] == 14);
    CHECK(j["n_groups"] == 20);
    CHECK(j["seed"] == 20230456);
    CHECK(j["group_r"].size() == 20);
    CHECK(double(j["mean"]) > 0.0);
}

TEST_CASE("a different seed changes the robustness draw") {
    RunConfig c;
    c.command = "robustness";
    c.bundled = true;
    const fs::path a = out_dir("robustness_seed_a");
    c.out = a.string();
    CHECK(run_command(c) == 0);
    c.seed = 1;
    const fs::path b = out_dir("robustness_seed_b");
    c.out = b.string();
    CHECK(run_command(c) == 0);
    CHECK(slurp(a / "robustness.json") != slurp(b / "robustness.json"));
}

TEST_CASE("sections reports the fixture provenance tallies") {
    const fs::path dir = out_dir("sections_fixture");
    RunConfig c;
    c.command = "sections";
    c.input = kFixtures + "/corpus";
    c.out = dir.string();
    CHECK(run_command(c) == 0);
    const json j = slurp_json(dir / "sections.json");
    CHECK(j["n_patents"] == 12);
    CHECK(j["provenance_counts"]["exact-heading"] == 30);
    CHECK(j["provenance_counts"]["partial-heading"] == 4);
    CHECK(j["provenance_counts"]["paragraph-match"] == 4);
    CHECK(j["provenance_counts"]["manual-override"] == 2);
    CHECK(j["provenance_counts"]["absent"] == 8);

    const std::string csv = slurp(dir / "sections.csv");
    CHECK(csv.find("P07,beta,exact-heading,exact-heading,manual-override,absent") !=
          std::string::npos);
    CHECK(csv.find("P12,beta,exact-heading,absent,absent,absent") != std::string::npos);
}

TEST_CASE("count on the hand-checked mini corpus") {
    const fs::path dir = out_dir("count_mini");
    RunConfig c;
    c.command = "count";
    c.input = kFixtures + "/mini";
    c.out = dir.string();
    CHECK(run_command(c) == 0);
    const std::string csv = slurp(dir / "counts.csv");
    const std::string expected =
        "domain,n_patents,prevent,undesirable,requirement,fail,disadvantage,overcome,"
        "six_kw_total,word_total,kw_per_100k,k_percent\n"
        "gamma,2,2,2,1,2,1,1,9,29,31034.4828,\n";
    CHECK(csv == expected);
}

TEST_CASE("missing input directory is an input error (exit 2)") {
    RunConfig c;
    c.command = "sections";
    c.input = "/nonexistent/corpus";
    c.out = out_dir("err_input").string();
    CHECK(run_command(c) == 2);
}

TEST_CASE("unknown command is a validation error (exit 3)") {
    RunConfig c;
    c.command = "frobnicate";
    c.out = out_dir("err_cmd").string();
    CHECK(run_command(c) == 3);
}

TEST_CASE("correlating a single mined domain fails validation (exit 3)") {
    RunConfig c;
    c.command = "correlate";
    c.input = kFixtures + "/mini";
    c.out = out_dir("err_small").string();
    CHECK(run_command(c) == 3);
}

TEST_CASE("impossible robustness grouping fails validation (exit 3)") {
    RunConfig c;
    c.command = "robustness";
    c.bundled = true;
    c.group_size = 99;
    c.out = out_dir("err_group").string();
    CHECK(run_command(c) == 3);
}

TEST_CASE("simulate writes trajectories and exponents") {
    const fs::path dir = out_dir("simulate_small");
    RunConfig c;
    c.command = "simulate";
    c.d_values = {1};
    c.attempts = 20000;
    c.n_seeds = 10;
    c.n_components = 20;
    c.m_max = 2.0;
    c.step = 0.01;
    c.out = dir.string();
    CHECK(run_command(c) == 0);
    CHECK(fs::exists(dir / "trajectory_d1.csv"));
    CHECK(fs::exists(dir / "montecarlo_d1.csv"));
    CHECK(fs::exists(dir / "exponents.csv"));
    const json j = slurp_json(dir / "simulate.json");
    REQUIRE(j["exponents"].size() == 1);
    const double slope = j["exponents"][0]["tail_slope"];
    CHECK(slope < 0.0); // decaying trajectory
    CHECK(j["exponents"][0]["target_slope"] == -1.0);

    // analytic and RK4 columns agree at the final row
    const std::string traj = slurp(dir / "trajectory_d1.csv");
    const std::size_t last = traj.rfind('\n', traj.size() - 2);
    std::istringstream row(traj.substr(last + 1));
    std::string m, analytic, ode;
    std::getline(row, m, ',');
    std::getline(row, analytic, ',');
    std::getline(row, ode, ',');
    CHECK(std::stod(analytic) == doctest::Approx(std::stod(ode)).epsilon(1e-8));
}

TEST_CASE("bundled count reruns are byte-identical") {
    RunConfig c;
    c.command = "count";
    c.bundled = true;
    const fs::path a = out_dir("count_rerun_a");
    c.out = a.string();
    CHECK(run_command(c) == 0);
    const fs::path b = out_dir("count_rerun_b");
    c.out = b.string();
    CHECK(run_command(c) == 0);
    CHECK(slurp(a / "counts.csv") == slurp(b / "counts.csv"));
    CHECK(slurp(a / "counts.json") == slurp(b / "counts.json"));
}
