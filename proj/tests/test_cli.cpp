#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <string>

#include "sinno/cli.hpp"
#include "sinno/errors.hpp"
#include "sinno/io.hpp"

using namespace sinno;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fresh_dir(const std::string& name) {
    const std::string dir = "./cli_out_" + name;
    fs::remove_all(dir);
    return dir;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return json::parse(in);
}

std::size_t count_rows(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    return rows;  // includes the header
}

}  // namespace

TEST_CASE("simulate: one realization writes one CSV with steps+1 rows") {
    SimulateConfig config;
    config.steps = 200;
    config.realizations = 1;
    config.out_dir = fresh_dir("sim1");
    const auto written = cmd_simulate(config);
    REQUIRE(written.size() == 2);  // path + manifest
    CHECK(count_rows(written[0]) == 202);  // header + 201 samples
    CHECK(fs::path(written.back()).filename() == "manifest.json");
}

TEST_CASE("simulate: three realizations list three streams in the manifest") {
    SimulateConfig config;
    config.steps = 100;
    config.realizations = 3;
    config.base_seed = 7;
    config.out_dir = fresh_dir("sim3");
    const auto written = cmd_simulate(config);
    REQUIRE(written.size() == 4);
    const json manifest = load_json(written.back());
    CHECK(manifest["schema_version"] == 1);
    CHECK(manifest["streams"].size() == 3);
    CHECK(manifest["streams"][0]["stream_index"] == 1);
    CHECK(manifest["streams"][2]["stream_index"] == 3);
    CHECK(manifest["base_seed"] == 7);
}

TEST_CASE("simulate: noise-free run reproduces the recurrence in the CSV") {
    SimulateConfig config;
    config.process = OuSpec{0.5, 0.0, 0.0, 1.0};
    config.steps = 50;
    config.horizon = 5.0;
    config.out_dir = fresh_dir("sim_det");
    const auto written = cmd_simulate(config);
    const SamplePath reread = read_path_csv(written[0]);
    REQUIRE(reread.size() == 51);
    double x = 1.0;
    const double dt = 0.1;
    for (int i = 1; i <= 50; ++i) {
        x += 0.5 * (0.0 - x) * dt;
        CHECK(reread.values[i] == x);  // %.17g round-trips exactly
    }
}

TEST_CASE("simulate: written paths reload bit-identically") {
    SimulateConfig config;
    config.steps = 300;
    config.base_seed = 99;
    config.out_dir = fresh_dir("sim_rt");
    const auto written = cmd_simulate(config);
    const SamplePath original = simulate(config.process, config.horizon, config.steps,
                                         SeedSpec{config.base_seed, 1});
    const SamplePath reread = read_path_csv(written[0]);
    REQUIRE(reread.size() == original.size());
    CHECK((reread.values == original.values).all());
    CHECK((reread.times == original.times).all());
}

TEST_CASE("sweep: paper-shaped run emits one row per n plus a rate fit") {
    SweepCliConfig config;
    config.realizations = 3;
    config.steps = 400;
    config.out_dir = fresh_dir("sweep_full");
    const auto written = cmd_sweep(config);  // default ns = 5,10,...,100
    REQUIRE(written.size() == 3);            // sweep.csv, summary.json, manifest.json
    CHECK(count_rows(written[0]) == 21);     // header + 20 rows
    const json summary = load_json(written[1]);
    CHECK(summary["reports"].size() == 20);
    CHECK(summary["rate_fit"].is_object());
    CHECK(summary["rate_fit"]["points_used"].get<int>() >= 3);
    CHECK(summary["schema_version"] == 1);
}

TEST_CASE("sweep: single n has no rate fit") {
    SweepCliConfig config;
    config.ns = {10};
    config.realizations = 2;
    config.steps = 200;
    config.out_dir = fresh_dir("sweep_one");
    const auto written = cmd_sweep(config);
    const json summary = load_json(written[1]);
    CHECK(summary["rate_fit"].is_null());
}

TEST_CASE("sweep: deterministic process zeros the std column") {
    SweepCliConfig config;
    config.process = OuSpec{0.5, 0.0, 0.0, 1.0};
    config.ns = {5, 10};
    config.realizations = 3;
    config.steps = 200;
    config.out_dir = fresh_dir("sweep_det");
    const auto written = cmd_sweep(config);
    const json summary = load_json(written[1]);
    for (const auto& row : summary["reports"]) {
        CHECK(row["mse_query_std"].get<double>() == 0.0);
        CHECK(row["mse_nodes"].get<double>() <= 1e-24);
    }
}

TEST_CASE("sweep: reconstruction curves cover the fine grid") {
    SweepCliConfig config;
    config.ns = {5, 10};
    config.recon_ns = {10};
    config.realizations = 1;
    config.steps = 250;
    config.out_dir = fresh_dir("sweep_recon");
    const auto written = cmd_sweep(config);
    bool found = false;
    for (const std::string& f : written) {
        if (fs::path(f).filename() == "recon_n10.csv") {
            found = true;
            CHECK(count_rows(f) == 252);  // header + 251
        }
    }
    CHECK(found);
}

TEST_CASE("sweep round-trip: rerunning on a reread path reproduces the MSEs") {
    SimulateConfig sim;
    sim.steps = 500;
    sim.base_seed = 31;
    sim.out_dir = fresh_dir("rt");
    const auto written = cmd_simulate(sim);
    const SamplePath original =
        simulate(sim.process, sim.horizon, sim.steps, SeedSpec{sim.base_seed, 1});
    const SamplePath reread = read_path_csv(written[0]);

    const Activation hat(Sigmoidal::Ramp());
    const UniformGrid grid(sim.horizon, 10);
    const SinnoOperator op_a = build_operator(original, grid, hat);
    const SinnoOperator op_b = build_operator(reread, grid, hat);
    CHECK(mse_global(op_a, original) == mse_global(op_b, reread));
    CHECK(mse_query(op_a, original, 3.7) == mse_query(op_b, reread, 3.7));
    CHECK(mse_nodes(op_a, original) == mse_nodes(op_b, reread));
}

TEST_CASE("covid: fixture run writes reconstruction, hold-out table, and summary") {
    CovidConfig config;
    config.file = std::string(TEST_DATA_DIR) + "/who_synthetic.csv";
    config.countries = {"Freedonia", "Sylvania", "Osterlich", "Atlantis"};
    config.n = 50;
    config.out_dir = fresh_dir("covid");
    const auto written = cmd_covid(config);

    int recon_files = 0;
    for (const std::string& f : written) {
        const std::string name = fs::path(f).filename().string();
        if (name.rfind("recon_", 0) == 0) {
            ++recon_files;
            CHECK(count_rows(f) == 367);  // header + full leap year
        }
        if (name == "holdout.csv") {
            CHECK(count_rows(f) == 4);  // header + three successful countries
        }
    }
    CHECK(recon_files == 3);

    const json manifest = load_json(written.back());
    CHECK(manifest["command"] == "covid");
    json summary;
    for (const std::string& f : written) {
        if (fs::path(f).filename() == "summary.json") summary = load_json(f);
    }
    REQUIRE(summary.is_object());
    int failures = 0;
    for (const auto& row : summary["countries"]) {
        if (!row["ok"].get<bool>()) {
            ++failures;
            CHECK(row["country"] == "Atlantis");
        } else {
            CHECK(row["warnings"].is_object());
            CHECK(row["rmse_holdout"].get<double>() >= 0.0);
        }
    }
    CHECK(failures == 1);
}

TEST_CASE("covid: Vulgaria warnings surface in the summary") {
    CovidConfig config;
    config.file = std::string(TEST_DATA_DIR) + "/who_synthetic.csv";
    config.countries = {"Vulgaria"};
    config.n = 40;
    config.out_dir = fresh_dir("covid_vulgaria");
    const auto written = cmd_covid(config);
    json summary;
    for (const std::string& f : written) {
        if (fs::path(f).filename() == "summary.json") summary = load_json(f);
    }
    REQUIRE(summary.is_object());
    const auto& row = summary["countries"][0];
    CHECK(row["warnings"]["duplicate_dates"] == 1);
    CHECK(row["warnings"]["missing_dates"] == 1);
}

TEST_CASE("covid: missing file fails with an I/O error and no partial output") {
    CovidConfig config;
    config.file = "./definitely_not_here.csv";
    config.countries = {"Freedonia"};
    config.out_dir = fresh_dir("covid_missing");
    CHECK_THROWS_AS(cmd_covid(config), IoError);
    CHECK(!fs::exists(fs::path(config.out_dir) / "holdout.csv"));
    CHECK(!fs::exists(fs::path(config.out_dir) / "manifest.json"));
}

TEST_CASE("covid: all countries failing raises the aggregate error") {
    CovidConfig config;
    config.file = std::string(TEST_DATA_DIR) + "/who_synthetic.csv";
    config.countries = {"Atlantis", "Elbonia"};
    config.out_dir = fresh_dir("covid_allfail");
    CHECK_THROWS_AS(cmd_covid(config), InputError);
}

TEST_CASE("unwritable output directory is an I/O error naming the path") {
    SimulateConfig config;
    config.steps = 10;
    config.out_dir = "/proc/definitely/not/writable";
    try {
        cmd_simulate(config);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("/proc") != std::string::npos);
    }
}

TEST_CASE("format json skips the CSV outputs") {
    SweepCliConfig config;
    config.ns = {5, 10, 20};
    config.realizations = 1;
    config.steps = 100;
    config.format = OutputFormat::Json;
    config.out_dir = fresh_dir("fmt_json");
    const auto written = cmd_sweep(config);
    for (const std::string& f : written) {
        CHECK(fs::path(f).extension() != ".csv");
    }
    CHECK(fs::exists(fs::path(config.out_dir) / "summary.json"));

    SweepCliConfig csv_only = config;
    csv_only.format = OutputFormat::Csv;
    csv_only.out_dir = fresh_dir("fmt_csv");
    const auto written_csv = cmd_sweep(csv_only);
    CHECK(fs::exists(fs::path(csv_only.out_dir) / "sweep.csv"));
    CHECK(!fs::exists(fs::path(csv_only.out_dir) / "summary.json"));
    CHECK(fs::exists(fs::path(csv_only.out_dir) / "manifest.json"));
}
