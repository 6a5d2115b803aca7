#include "sinno/cli.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sinno/errors.hpp"
#include "sinno/io.hpp"

namespace sinno {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

void ensure_out_dir(const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
    }
}

void write_json(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << doc.dump(2) << "\n";
    if (!out) {
        throw IoError("write failed for " + path);
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json process_to_json(const ProcessSpec& spec) {
    if (const auto* ou = std::get_if<OuSpec>(&spec)) {
        return {{"kind", "ou"}, {"theta", ou->theta}, {"mu", ou->mu},
                {"sigma", ou->sigma}, {"x0", ou->x0}};
    }
    const auto& w = std::get<WienerSpec>(spec);
    return {{"kind", "wiener"}, {"sigma", w.sigma}, {"x0", w.x0}};
}

json activation_to_json(const Activation& a) {
    if (a.source().kind() == SigmoidalKind::Ramp) {
        return {{"kind", "ramp"}, {"m", a.half_support()}};
    }
    return {{"kind", "bspline"}, {"order", a.source().order()}, {"m", a.half_support()}};
}

bool want_csv(OutputFormat f) { return f != OutputFormat::Json; }
bool want_json(OutputFormat f) { return f != OutputFormat::Csv; }

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name) {
        out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    }
    return out;
}

}  // namespace

std::vector<std::string> cmd_simulate(const SimulateConfig& config) {
    ensure_out_dir(config.out_dir);
    std::vector<std::string> written;
    json streams = json::array();

    for (int r = 1; r <= config.realizations; ++r) {
        const SeedSpec seed{config.base_seed, static_cast<std::uint64_t>(r)};
        const SamplePath path = simulate(config.process, config.horizon, config.steps, seed);
        char name[40];
        std::snprintf(name, sizeof(name), "path_r%04d.csv", r);
        const std::string file = (fs::path(config.out_dir) / name).string();
        write_path_csv(file, path);
        written.push_back(file);
        streams.push_back({{"stream_index", r},
                           {"derived_seed", path.seed},
                           {"file", name},
                           {"rows", path.size()}});
    }

    const std::string manifest = (fs::path(config.out_dir) / "manifest.json").string();
    write_json(manifest, json{{"schema_version", kSchemaVersion},
                              {"command", "simulate"},
                              {"process", process_to_json(config.process)},
                              {"horizon", config.horizon},
                              {"steps", config.steps},
                              {"realizations", config.realizations},
                              {"base_seed", config.base_seed},
                              {"streams", streams}});
    written.push_back(manifest);
    return written;
}

std::vector<std::string> cmd_sweep(const SweepCliConfig& config) {
    ensure_out_dir(config.out_dir);

    std::vector<int> ns = config.ns;
    if (ns.empty()) {
        for (int n = 5; n <= 100; n += 5) ns.push_back(n);
    }

    SweepConfig sweep;
    sweep.ns = ns;
    sweep.realizations = config.realizations;
    sweep.t_q = config.t_q;
    sweep.horizon = config.horizon;
    sweep.fine_steps = config.steps;
    sweep.base_seed = config.base_seed;
    const std::vector<MseReport> reports = mc_sweep(config.process, config.activation, sweep);

    std::vector<std::string> written;
    if (want_csv(config.format)) {
        const std::string file = (fs::path(config.out_dir) / "sweep.csv").string();
        std::ofstream out(file);
        if (!out) throw IoError("cannot write " + file);
        out << "n,mse_nodes,mse_query_mean,mse_query_std,mse_global_mean\n";
        for (const MseReport& r : reports) {
            out << r.n << ',' << fmt(r.mse_nodes) << ',' << fmt(r.mse_query) << ','
                << fmt(r.mse_query_std) << ',' << fmt(r.mse_global) << '\n';
        }
        if (!out) throw IoError("write failed for " + file);
        written.push_back(file);

        for (int n : config.recon_ns) {
            const SamplePath path = simulate(config.process, config.horizon, config.steps,
                                             SeedSpec{config.base_seed, 1});
            const UniformGrid grid(config.horizon, n);
            const NodeSampling sampling =
                (config.steps % n == 0) ? NodeSampling::Exact : NodeSampling::Nearest;
            const SinnoOperator op = build_operator(path, grid, config.activation, sampling);
            const Eigen::ArrayXd recon = evaluate_many(op, path.times);
            const std::string rfile =
                (fs::path(config.out_dir) / ("recon_n" + std::to_string(n) + ".csv")).string();
            std::ofstream rout(rfile);
            if (!rout) throw IoError("cannot write " + rfile);
            rout << "t,x,sinno\n";
            for (Eigen::Index i = 0; i < path.size(); ++i) {
                rout << fmt(path.times[i]) << ',' << fmt(path.values[i]) << ',' << fmt(recon[i])
                     << '\n';
            }
            if (!rout) throw IoError("write failed for " + rfile);
            written.push_back(rfile);
        }
    }

    const json params{{"schema_version", kSchemaVersion},
                      {"command", "sweep"},
                      {"process", process_to_json(config.process)},
                      {"activation", activation_to_json(config.activation)},
                      {"ns", ns},
                      {"realizations", config.realizations},
                      {"query_point", config.t_q},
                      {"horizon", config.horizon},
                      {"fine_steps", config.steps},
                      {"base_seed", config.base_seed},
                      {"recon_ns", config.recon_ns}};
    json summary = params;
    json rows = json::array();
    std::vector<std::pair<int, double>> fit_points;
    for (const MseReport& r : reports) {
        rows.push_back({{"n", r.n},
                        {"mse_nodes", r.mse_nodes},
                        {"mse_query_mean", r.mse_query},
                        {"mse_query_std", r.mse_query_std},
                        {"mse_global_mean", r.mse_global}});
        fit_points.emplace_back(r.n, r.mse_global);
    }
    summary["reports"] = rows;
    try {
        const RateFit fit = rate_fit(fit_points, config.horizon);
        summary["rate_fit"] = {{"alpha_hat", fit.alpha_hat},
                               {"c_hat", fit.c_hat},
                               {"r_squared", fit.r_squared},
                               {"points_used", fit.points_used}};
    } catch (const InputError&) {
        summary["rate_fit"] = nullptr;  // fewer than 3 usable points
    }

    if (want_json(config.format)) {
        const std::string file = (fs::path(config.out_dir) / "summary.json").string();
        write_json(file, summary);
        written.push_back(file);
    }

    const std::string manifest = (fs::path(config.out_dir) / "manifest.json").string();
    json files = json::array();
    for (const std::string& f : written) files.push_back(fs::path(f).filename().string());
    json manifest_doc = params;
    manifest_doc["outputs"] = files;
    write_json(manifest, manifest_doc);
    written.push_back(manifest);
    return written;
}

std::vector<std::string> cmd_covid(const CovidConfig& config) {
    ensure_out_dir(config.out_dir);

    std::vector<std::string> countries = config.countries;
    if (countries.empty()) countries.push_back("India");

    struct CountryRun {
        std::string country;
        bool ok = false;
        std::string error;
        double rmse = 0.0;
        double mse_nodes = 0.0;
        double mse_global = 0.0;
        json warnings;
    };

    std::vector<std::string> written;
    std::vector<CountryRun> runs;
    std::size_t failures = 0;

    for (const std::string& country : countries) {
        CountryRun run;
        run.country = country;
        try {
            const Dataset ds = load_who_csv(config.file, country, config.year);
            run.warnings = {{"blank_values", ds.blank_values},
                            {"duplicate_dates", ds.duplicate_dates},
                            {"missing_dates", ds.missing_dates}};
            const FitScore fit = fit_and_score(ds, config.n, config.activation);
            run.mse_nodes = fit.mse_nodes;
            run.mse_global = fit.mse_global;
            const HoldoutResult holdout =
                holdout_rmse(ds, config.n, config.activation, config.holdout_days, config.rule);
            run.rmse = holdout.rmse;
            run.ok = true;

            if (want_csv(config.format)) {
                const SamplePath samples = normalize_time(ds);
                const Eigen::ArrayXd recon = evaluate_many(fit.op, samples.times);
                const std::string rfile =
                    (fs::path(config.out_dir) / ("recon_" + sanitize(country) + ".csv")).string();
                std::ofstream out(rfile);
                if (!out) throw IoError("cannot write " + rfile);
                out << "date,actual,predicted\n";
                for (std::size_t i = 0; i < ds.records.size(); ++i) {
                    out << format_iso_date(ds.records[i].date) << ','
                        << fmt(ds.records[i].value) << ','
                        << fmt(recon[static_cast<Eigen::Index>(i)]) << '\n';
                }
                if (!out) throw IoError("write failed for " + rfile);
                written.push_back(rfile);
            }
        } catch (const IoError&) {
            throw;  // unreadable file or unwritable output: fail the whole run
        } catch (const std::exception& e) {
            run.error = e.what();
            ++failures;
        }
        runs.push_back(std::move(run));
    }

    if (failures == countries.size()) {
        throw InputError("all " + std::to_string(countries.size()) +
                         " countries failed to load from " + config.file);
    }

    if (want_csv(config.format)) {
        const std::string hfile = (fs::path(config.out_dir) / "holdout.csv").string();
        std::ofstream out(hfile);
        if (!out) throw IoError("cannot write " + hfile);
        out << "country,rmse\n";
        for (const CountryRun& run : runs) {
            if (run.ok) out << run.country << ',' << fmt(run.rmse) << '\n';
        }
        if (!out) throw IoError("write failed for " + hfile);
        written.push_back(hfile);
    }

    json summary{{"schema_version", kSchemaVersion},
                 {"command", "covid"},
                 {"file", config.file},
                 {"year", config.year},
                 {"n", config.n},
                 {"holdout_days", config.holdout_days},
                 {"holdout_rule",
                  config.rule == HoldoutRule::ConstantExtension ? "constant" : "support"},
                 {"activation", activation_to_json(config.activation)}};
    json rows = json::array();
    for (const CountryRun& run : runs) {
        json row{{"country", run.country}, {"ok", run.ok}};
        if (run.ok) {
            row["rmse_holdout"] = run.rmse;
            row["mse_nodes"] = run.mse_nodes;
            row["mse_global"] = run.mse_global;
            row["warnings"] = run.warnings;
        } else {
            row["error"] = run.error;
        }
        rows.push_back(std::move(row));
    }
    summary["countries"] = rows;

    if (want_json(config.format)) {
        const std::string file = (fs::path(config.out_dir) / "summary.json").string();
        write_json(file, summary);
        written.push_back(file);
    }

    const std::string manifest = (fs::path(config.out_dir) / "manifest.json").string();
    json files = json::array();
    for (const std::string& f : written) files.push_back(fs::path(f).filename().string());
    write_json(manifest, json{{"schema_version", kSchemaVersion},
                              {"command", "covid"},
                              {"file", config.file},
                              {"countries", countries},
                              {"year", config.year},
                              {"n", config.n},
                              {"holdout_days", config.holdout_days},
                              {"holdout_rule",
                               config.rule == HoldoutRule::ConstantExtension ? "constant"
                                                                             : "support"},
                              {"outputs", files}});
    written.push_back(manifest);
    return written;
}

}  // namespace sinno
