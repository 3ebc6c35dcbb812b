#pragma once

#include <stdexcept>
#include <string>

namespace cubefit {

// Bad user input: wrong dimensions, malformed files, invalid flags.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation failed to reach its target: solver breakdown, quadrature
// that cannot meet its tolerance, root finder out of iterations.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cubefit
