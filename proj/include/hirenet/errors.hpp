#pragma once

#include <stdexcept>
#include <string>

namespace hirenet {

// Data-content failure: unreadable input, empty network, non-convergence.
// The CLI maps these to exit code 1.
class DataError : public std::runtime_error {
  public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Input file does not match its documented schema.
class SchemaError : public DataError {
  public:
    explicit SchemaError(const std::string& what) : DataError(what) {}
};

} // namespace hirenet
