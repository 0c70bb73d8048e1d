#pragma once

#include <stdexcept>
#include <string>

namespace darkvid {

// Malformed or inconsistent input data (bad file bytes, bad config values,
// missing frames). Maps to CLI exit code 2.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values or degenerate numerical situations. Maps to CLI exit
// code 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace darkvid
