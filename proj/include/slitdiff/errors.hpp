#pragma once

#include <stdexcept>
#include <string>

namespace slitdiff {

// Invalid domain values: bad slit geometry, grids, wave parameters.
class spec_error : public std::invalid_argument {
public:
    explicit spec_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A quadrature request below the resolution the oscillatory kernel needs.
// Carries the minimum panel count that would have been accepted.
class nyquist_error : public std::runtime_error {
public:
    nyquist_error(const std::string& msg, long required)
        : std::runtime_error(msg), required_panels(required) {}
    long required_panels;
};

// Problems in a config file or on the command line.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace slitdiff
