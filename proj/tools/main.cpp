#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "sinno/cli.hpp"
#include "sinno/errors.hpp"

namespace {

// Exit codes: 0 success, 1 usage, 2 input/data, 3 I/O.
constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kIoFailure = 3;

struct CommonFlags {
    std::string process = "ou";
    double theta = 0.5;
    double mu = 0.0;
    double sigma = 1.0;
    double x0 = 0.0;
    double horizon = 10.0;
    int steps = 1000;
    std::string activation = "ramp";
    std::uint64_t seed = 42;
    std::string out = "out";
    std::string format = "both";
};

sinno::ProcessSpec make_process(const CommonFlags& flags) {
    if (flags.process == "wiener") {
        return sinno::WienerSpec{flags.sigma, flags.x0};
    }
    return sinno::OuSpec{flags.theta, flags.mu, flags.sigma, flags.x0};
}

// "ramp" or "bspline:<r>".
sinno::Activation make_activation(const std::string& name) {
    if (name == "ramp") {
        return sinno::Activation(sinno::Sigmoidal::Ramp());
    }
    if (name.rfind("bspline:", 0) == 0) {
        try {
            const int order = std::stoi(name.substr(8));
            return sinno::Activation(sinno::Sigmoidal::BSpline(order));
        } catch (const std::exception& e) {
            throw CLI::ValidationError("--activation", e.what());
        }
    }
    throw CLI::ValidationError("--activation", "expected 'ramp' or 'bspline:<r>', got '" + name + "'");
}

sinno::OutputFormat make_format(const std::string& name) {
    if (name == "csv") return sinno::OutputFormat::Csv;
    if (name == "json") return sinno::OutputFormat::Json;
    return sinno::OutputFormat::Both;
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_process) {
    if (with_process) {
        cmd->add_option("--process", flags.process, "Process kind")
            ->check(CLI::IsMember({"ou", "wiener"}));
        cmd->add_option("--theta", flags.theta, "OU mean-reversion rate")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--mu", flags.mu, "OU long-run mean");
        cmd->add_option("--sigma", flags.sigma, "Volatility")->check(CLI::NonNegativeNumber);
        cmd->add_option("--x0", flags.x0, "Initial value");
        cmd->add_option("--horizon", flags.horizon, "Time horizon T")->check(CLI::PositiveNumber);
        cmd->add_option("--steps", flags.steps, "Fine-grid step count")
            ->check(CLI::Range(2, 100000000));
        cmd->add_option("--seed", flags.seed, "Base RNG seed");
    }
    cmd->add_option("--activation", flags.activation, "Activation: ramp or bspline:<r>");
    cmd->add_option("--out", flags.out, "Output directory");
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "both"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic interpolation operators: simulation, error sweeps, and the "
                 "daily-case data pipeline"};
    app.require_subcommand(1);

    CommonFlags sim_flags;
    int sim_realizations = 1;
    CLI::App* sim = app.add_subcommand("simulate", "Simulate process realizations to CSV");
    add_common_flags(sim, sim_flags, true);
    sim->add_option("--realizations", sim_realizations, "Number of independent paths")
        ->check(CLI::PositiveNumber);

    CommonFlags sweep_flags;
    std::vector<int> sweep_ns;
    std::vector<int> recon_ns;
    int sweep_realizations = 3;
    double query = 3.7;
    CLI::App* sweep = app.add_subcommand("sweep", "Monte-Carlo MSE sweep over node counts");
    add_common_flags(sweep, sweep_flags, true);
    sweep->add_option("--ns", sweep_ns, "Node parameters n (comma list)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sweep->add_option("--realizations", sweep_realizations, "Realizations per n")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--query", query, "Query point t_q in (0, horizon)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--recon", recon_ns, "Write t,x,sinno reconstruction curves for these n")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);

    CommonFlags covid_flags;
    std::string file;
    std::vector<std::string> countries;
    int year = 2020;
    int covid_n = 100;
    int holdout_days = 14;
    std::string holdout_rule = "constant";
    CLI::App* covid = app.add_subcommand("covid", "Fit and hold-out score daily case data");
    add_common_flags(covid, covid_flags, false);
    covid->add_option("--file", file, "WHO-format daily CSV")->required();
    covid->add_option("--country", countries, "Country (repeatable)");
    covid->add_option("--year", year, "Calendar year");
    covid->add_option("--nodes,--ns", covid_n, "Node parameter n")->check(CLI::PositiveNumber);
    covid->add_option("--holdout-days", holdout_days, "Hold-out day count D")
        ->check(CLI::PositiveNumber);
    covid->add_option("--holdout-rule", holdout_rule, "Forecast rule past the training window")
        ->check(CLI::IsMember({"constant", "support"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the message or help text
        return code == 0 ? 0 : kUsageError;
    }

    try {
        std::vector<std::string> written;
        if (sim->parsed()) {
            sinno::SimulateConfig config;
            config.process = make_process(sim_flags);
            config.horizon = sim_flags.horizon;
            config.steps = sim_flags.steps;
            config.realizations = sim_realizations;
            config.base_seed = sim_flags.seed;
            config.out_dir = sim_flags.out;
            config.format = make_format(sim_flags.format);
            written = sinno::cmd_simulate(config);
        } else if (sweep->parsed()) {
            sinno::SweepCliConfig config;
            config.process = make_process(sweep_flags);
            config.activation = make_activation(sweep_flags.activation);
            config.ns = sweep_ns;
            config.realizations = sweep_realizations;
            config.t_q = query;
            config.horizon = sweep_flags.horizon;
            config.steps = sweep_flags.steps;
            config.base_seed = sweep_flags.seed;
            config.recon_ns = recon_ns;
            config.out_dir = sweep_flags.out;
            config.format = make_format(sweep_flags.format);
            if (!(config.t_q > 0.0) || !(config.t_q < config.horizon)) {
                std::fprintf(stderr, "error: --query must lie strictly inside (0, horizon)\n");
                return kUsageError;
            }
            written = sinno::cmd_sweep(config);
        } else {
            sinno::CovidConfig config;
            config.file = file;
            config.countries = countries;
            config.year = year;
            config.n = covid_n;
            config.holdout_days = holdout_days;
            config.rule = holdout_rule == "support" ? sinno::HoldoutRule::SupportExtension
                                                    : sinno::HoldoutRule::ConstantExtension;
            config.activation = make_activation(covid_flags.activation);
            config.out_dir = covid_flags.out;
            config.format = make_format(covid_flags.format);
            written = sinno::cmd_covid(config);
        }
        for (const std::string& f : written) {
            std::printf("wrote %s\n", f.c_str());
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsageError;
    } catch (const sinno::IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kIoFailure;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kDataError;
    }
}
