#include "sinno/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "sinno/errors.hpp"

namespace sinno {

void write_path_csv(const std::string& path, const SamplePath& sample_path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write path CSV: " + path);
    }
    out << "t,value\n";
    char buf[80];
    for (Eigen::Index i = 0; i < sample_path.size(); ++i) {
        // %.17g round-trips any double exactly.
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", sample_path.times[i],
                      sample_path.values[i]);
        out << buf;
    }
    if (!out) {
        throw IoError("write failed for path CSV: " + path);
    }
}

SamplePath read_path_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open path CSV: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw InputError("path CSV is empty: " + path);
    }
    std::vector<double> times;
    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        double t = 0.0, v = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &t, &v) != 2) {
            throw InputError("bad row " + std::to_string(line_no) + " in " + path + ": " + line);
        }
        times.push_back(t);
        values.push_back(v);
    }
    SamplePath result;
    result.times = Eigen::Map<Eigen::ArrayXd>(times.data(), static_cast<Eigen::Index>(times.size()));
    result.values =
        Eigen::Map<Eigen::ArrayXd>(values.data(), static_cast<Eigen::Index>(values.size()));
    validate_path(result);
    return result;
}

}  // namespace sinno
