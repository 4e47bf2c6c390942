#pragma once

#include <stdexcept>
#include <string>

namespace pbun {

/// Raised for every contract violation in the library (bad input, guards,
/// inconsistent data). The message names the failed condition.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pbun
