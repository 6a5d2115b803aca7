#include "sinno/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "sinno/errors.hpp"

namespace sinno {

// Howard Hinnant's civil-date algorithm.
long days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2u) / 5u + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long>(doe) - 719468;
}

void civil_from_days(long serial, int& year, int& month, int& day) {
    serial += 719468;
    const long era = (serial >= 0 ? serial : serial - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(serial - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const long y = static_cast<long>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    month = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    year = static_cast<int>(y + (month <= 2));
}

long parse_iso_date(const std::string& text) {
    int y = 0, m = 0, d = 0;
    char dash1 = 0, dash2 = 0;
    std::istringstream in(text);
    in >> y >> dash1 >> m >> dash2 >> d;
    if (in.fail() || dash1 != '-' || dash2 != '-' || m < 1 || m > 12 || d < 1 || d > 31) {
        throw InputError("unparseable ISO-8601 date: '" + text + "'");
    }
    return days_from_civil(y, m, d);
}

std::string format_iso_date(long serial) {
    int y, m, d;
    civil_from_days(serial, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return std::string(buf);
}

namespace {

// Splits one CSV line; double quotes wrap fields, "" escapes a quote.
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string trim(const std::string& s) {
    const auto from = s.find_first_not_of(" \t");
    if (from == std::string::npos) return "";
    const auto to = s.find_last_not_of(" \t");
    return s.substr(from, to - from + 1);
}

}  // namespace

Dataset load_who_csv(const std::string& path, const std::string& country, int year) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open CSV file: " + path);
    }
    std::string header_line;
    if (!std::getline(in, header_line)) {
        throw SchemaError("CSV file is empty: " + path);
    }
    // Strip a UTF-8 BOM if the exporter left one.
    if (header_line.size() >= 3 && header_line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        header_line.erase(0, 3);
    }
    const std::vector<std::string> header = split_csv_line(header_line);
    long date_col = -1, country_col = -1, cases_col = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = trim(header[i]);
        if (name == "Date_reported") date_col = static_cast<long>(i);
        else if (name == "Country") country_col = static_cast<long>(i);
        else if (name == "New_cases") cases_col = static_cast<long>(i);
    }
    if (date_col < 0 || country_col < 0 || cases_col < 0) {
        throw SchemaError("CSV is missing required columns (need Date_reported, Country, "
                          "New_cases): " + path);
    }

    Dataset ds;
    ds.country = country;
    std::map<long, double> by_date;  // last occurrence wins
    const long year_begin = days_from_civil(year, 1, 1);
    const long year_end = days_from_civil(year + 1, 1, 1);

    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = split_csv_line(line);
        const std::size_t needed =
            static_cast<std::size_t>(std::max({date_col, country_col, cases_col})) + 1;
        if (fields.size() < needed) {
            throw SchemaError("row " + std::to_string(line_no) + " has " +
                              std::to_string(fields.size()) + " fields, expected at least " +
                              std::to_string(needed));
        }
        if (trim(fields[country_col]) != country) continue;
        const long date = parse_iso_date(trim(fields[date_col]));
        if (date < year_begin || date >= year_end) continue;

        const std::string cases = trim(fields[cases_col]);
        double value = 0.0;
        if (cases.empty()) {
            ++ds.blank_values;  // WHO files leave gaps blank; dropping rows would warp the axis
        } else {
            try {
                std::size_t used = 0;
                value = std::stod(cases, &used);
                if (used != cases.size()) throw std::invalid_argument(cases);
            } catch (const std::exception&) {
                throw SchemaError("row " + std::to_string(line_no) +
                                  ": unparseable New_cases value '" + cases + "'");
            }
        }
        if (by_date.count(date)) ++ds.duplicate_dates;
        by_date[date] = value;
    }

    if (by_date.empty()) {
        throw NotFoundError("no rows for country '" + country + "' in year " +
                            std::to_string(year));
    }
    ds.records.reserve(by_date.size());
    for (const auto& [date, value] : by_date) {
        ds.records.push_back({date, value});
    }
    ds.missing_dates = (ds.last_date() - ds.first_date() + 1) -
                       static_cast<long>(ds.records.size());
    return ds;
}

SamplePath normalize_time(const Dataset& ds) {
    if (ds.records.size() < 2) {
        throw InputError("time normalization needs at least 2 records");
    }
    const long t0 = ds.first_date();
    const double span = static_cast<double>(ds.last_date() - t0);
    SamplePath path;
    path.times.resize(static_cast<Eigen::Index>(ds.records.size()));
    path.values.resize(static_cast<Eigen::Index>(ds.records.size()));
    for (std::size_t i = 0; i < ds.records.size(); ++i) {
        path.times[static_cast<Eigen::Index>(i)] =
            static_cast<double>(ds.records[i].date - t0) / span;
        path.values[static_cast<Eigen::Index>(i)] = ds.records[i].value;
    }
    path.times[path.times.size() - 1] = 1.0;  // pin the endpoint against rounding
    return path;
}

FitScore fit_and_score(const Dataset& ds, int n, const Activation& activation) {
    if (static_cast<long>(ds.records.size()) < n + 1) {
        throw InputError("dataset has " + std::to_string(ds.records.size()) +
                         " records, fewer than the " + std::to_string(n + 1) +
                         " nodes requested");
    }
    const SamplePath path = normalize_time(ds);
    const UniformGrid grid(1.0, n);
    SinnoOperator op = build_operator(path, grid, activation, NodeSampling::Nearest);
    FitScore score{mse_nodes(op, path), mse_global(op, path), std::move(op)};
    return score;
}

HoldoutResult holdout_rmse(const Dataset& ds, int n, const Activation& activation, int days,
                           HoldoutRule rule) {
    if (days < 1) {
        throw InputError("hold-out needs at least 1 day");
    }
    if (static_cast<long>(ds.records.size()) <= days + 1) {
        throw InputError("dataset has " + std::to_string(ds.records.size()) +
                         " records, too few to hold out " + std::to_string(days) + " days");
    }

    Dataset training = ds;
    training.records.resize(ds.records.size() - static_cast<std::size_t>(days));
    const FitScore fit = fit_and_score(training, n, activation);
    const SinnoOperator& op = fit.op;

    const long train_t0 = training.first_date();
    const double train_span = static_cast<double>(training.last_date() - train_t0);

    HoldoutResult result;
    result.holdout_days = days;
    result.predictions.reserve(static_cast<std::size_t>(days));
    double sum_sq = 0.0;
    const double last_node_value = op.coefficients[op.coefficients.size() - 1];
    for (std::size_t i = ds.records.size() - static_cast<std::size_t>(days);
         i < ds.records.size(); ++i) {
        const TimeSeriesRecord& rec = ds.records[i];
        // Hold-out dates map through the training normalization, landing at t > 1.
        const double t = static_cast<double>(rec.date - train_t0) / train_span;
        double predicted = 0.0;
        switch (rule) {
            case HoldoutRule::ConstantExtension:
                predicted = last_node_value;
                break;
            case HoldoutRule::SupportExtension: {
                // Past the last node only that node's bump can still be live.
                const double scale = op.activation.support() / op.grid.step();
                predicted = last_node_value *
                            eval_activation(op.activation, scale * (t - op.grid.horizon()));
                break;
            }
        }
        const double diff = rec.value - predicted;
        sum_sq += diff * diff;
        result.predictions.push_back({rec.date, predicted, rec.value});
    }
    result.rmse = std::sqrt(sum_sq / static_cast<double>(days));
    return result;
}

MultiCountryReport multi_country_report(const std::string& path,
                                        const std::vector<std::string>& countries, int year,
                                        int n, int days, const Activation& activation,
                                        HoldoutRule rule) {
    if (countries.empty()) {
        throw InputError("multi-country report needs at least one country");
    }
    MultiCountryReport report;
    std::size_t failures = 0;
    for (const std::string& country : countries) {
        CountryOutcome outcome;
        outcome.country = country;
        try {
            const Dataset ds = load_who_csv(path, country, year);
            outcome.result = holdout_rmse(ds, n, activation, days, rule);
            outcome.ok = true;
        } catch (const IoError&) {
            throw;  // a missing/unreadable file dooms every country alike
        } catch (const std::exception& e) {
            outcome.error = e.what();
            ++failures;
        }
        report.outcomes.push_back(std::move(outcome));
    }
    if (failures == countries.size()) {
        throw InputError("all " + std::to_string(countries.size()) +
                         " countries failed to load from " + path);
    }
    return report;
}

}  // namespace sinno
