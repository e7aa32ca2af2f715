#pragma once

#include <stdexcept>
#include <string>

namespace ribcat {

/// Malformed or inconsistent input data (bad file, bad tensor shape, ...).
/// CLI maps this to exit code 2.
struct LoadError : std::runtime_error {
    explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation could not be carried out (non-convergence, unsupported
/// request, integrality violation). CLI maps this to exit code 2.
struct ComputeError : std::runtime_error {
    explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ribcat
