#pragma once

#include <string>
#include <vector>

#include "sinno/ingest.hpp"
#include "sinno/metrics.hpp"

namespace sinno {

enum class OutputFormat { Csv, Json, Both };

// `simulate`: write one t,value CSV per realization plus a manifest.
struct SimulateConfig {
    ProcessSpec process = OuSpec{};
    double horizon = 10.0;
    int steps = 1000;
    int realizations = 1;
    std::uint64_t base_seed = 42;
    std::string out_dir = "out";
    OutputFormat format = OutputFormat::Both;
};

// `sweep`: Monte-Carlo error table over n, optional reconstruction curves.
struct SweepCliConfig {
    ProcessSpec process = OuSpec{};
    Activation activation{Sigmoidal::Ramp()};
    std::vector<int> ns;  // empty means 5,10,...,100
    int realizations = 3;
    double t_q = 3.7;
    double horizon = 10.0;
    int steps = 1000;
    std::uint64_t base_seed = 42;
    std::vector<int> recon_ns;  // write t,x,sinno curves for these n
    std::string out_dir = "out";
    OutputFormat format = OutputFormat::Both;
};

// `covid`: per-country reconstruction, hold-out table, and summary.
struct CovidConfig {
    std::string file;
    std::vector<std::string> countries;  // empty means India
    int year = 2020;
    int n = 100;
    int holdout_days = 14;
    HoldoutRule rule = HoldoutRule::ConstantExtension;
    Activation activation{Sigmoidal::Ramp()};
    std::string out_dir = "out";
    OutputFormat format = OutputFormat::Both;
};

// Each command returns the files it wrote; the manifest goes last as the
// completion marker. Data CSVs and JSON summaries follow `format`; the
// manifest is always written.
std::vector<std::string> cmd_simulate(const SimulateConfig& config);
std::vector<std::string> cmd_sweep(const SweepCliConfig& config);
std::vector<std::string> cmd_covid(const CovidConfig& config);

}  // namespace sinno
