#pragma once

#include <stdexcept>
#include <string>

namespace flowse {

/// Unusable input data: bad file, malformed header, mismatched shapes or rates.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation produced non-finite values or failed numerically.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace flowse
