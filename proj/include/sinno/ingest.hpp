#pragma once

#include <string>
#include <vector>

#include "sinno/metrics.hpp"
#include "sinno/operator.hpp"

namespace sinno {

// Proleptic-Gregorian day count since 1970-01-01; timezone-free by
// construction, so date arithmetic is plain integer arithmetic.
long days_from_civil(int year, int month, int day);
void civil_from_days(long serial, int& year, int& month, int& day);
long parse_iso_date(const std::string& text);  // YYYY-MM-DD
std::string format_iso_date(long serial);

// One daily observation.
struct TimeSeriesRecord {
    long date = 0;  // day serial
    double value = 0.0;
};

// Country time series: date-sorted, de-duplicated daily records plus
// the ingest anomalies encountered while loading.
struct Dataset {
    std::string country;
    std::vector<TimeSeriesRecord> records;
    long blank_values = 0;     // empty value cells coerced to 0
    long duplicate_dates = 0;  // repeated dates (last occurrence kept)
    long missing_dates = 0;    // calendar gaps between first and last date

    long first_date() const { return records.front().date; }
    long last_date() const { return records.back().date; }
};

// Reads the WHO daily CSV (columns Date_reported, Country, New_cases;
// extras ignored) and keeps the rows for one country and calendar year.
Dataset load_who_csv(const std::string& path, const std::string& country, int year);

// Maps dates linearly onto [0, 1]: first record to 0, last to 1.
SamplePath normalize_time(const Dataset& ds);

struct FitScore {
    double mse_nodes = 0.0;
    double mse_global = 0.0;
    SinnoOperator op;
};

// Builds the interpolant with n + 1 uniform nodes over the normalized
// time axis (nearest-date coefficients) and scores it on the data.
FitScore fit_and_score(const Dataset& ds, int n, const Activation& activation);

// Forecast rule for dates past the training window, where the operator's
// compact support would otherwise pin the raw sum to zero.
enum class HoldoutRule {
    ConstantExtension,  // carry the last node value forward
    SupportExtension,   // raw operator sum: decays to 0 past one step
};

struct HoldoutPrediction {
    long date = 0;
    double predicted = 0.0;
    double actual = 0.0;
};

struct HoldoutResult {
    int holdout_days = 0;
    double rmse = 0.0;
    std::vector<HoldoutPrediction> predictions;
};

// Trains on all but the last `days` records (re-normalized to [0, 1]),
// then scores the held-out tail through the training normalization.
HoldoutResult holdout_rmse(const Dataset& ds, int n, const Activation& activation, int days,
                           HoldoutRule rule = HoldoutRule::ConstantExtension);

struct CountryOutcome {
    std::string country;
    bool ok = false;
    std::string error;       // set when !ok
    HoldoutResult result;    // set when ok
};

struct MultiCountryReport {
    std::vector<CountryOutcome> outcomes;
};

// One hold-out evaluation per country; per-country failures are recorded
// in the report, and only an all-country failure throws.
MultiCountryReport multi_country_report(const std::string& path,
                                        const std::vector<std::string>& countries, int year,
                                        int n, int days, const Activation& activation,
                                        HoldoutRule rule = HoldoutRule::ConstantExtension);

}  // namespace sinno
