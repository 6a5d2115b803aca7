#pragma once

#include <stdexcept>
#include <string>

namespace sinno {

// Bad data or parameters supplied by the caller (CLI exit code 2).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Input file does not match the expected column layout.
struct SchemaError : InputError {
    explicit SchemaError(const std::string& what) : InputError(what) {}
};

// A requested record (country/year) is absent from the input.
struct NotFoundError : InputError {
    explicit NotFoundError(const std::string& what) : InputError(what) {}
};

// Exact-mode node sampling found no sample at a node time.
struct AlignmentError : InputError {
    explicit AlignmentError(const std::string& what) : InputError(what) {}
};

// Filesystem failure: unreadable input or unwritable output (CLI exit code 3).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sinno
