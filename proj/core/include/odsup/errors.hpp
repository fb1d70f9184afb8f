#pragma once

#include <stdexcept>
#include <string>

namespace odsup {

// Malformed or inconsistent input data (bad CSV, asymmetric matrix, n too small).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid option combinations or unparseable configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values where the statistic is undefined (e.g. a kernel returning NaN).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace odsup
