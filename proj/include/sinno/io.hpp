#pragma once

#include <string>

#include "sinno/sample_path.hpp"

namespace sinno {

// Two-column CSV "t,value" with a header row; full double precision so
// a written path reloads bit-identically.
void write_path_csv(const std::string& path, const SamplePath& sample_path);
SamplePath read_path_csv(const std::string& path);

}  // namespace sinno
