#pragma once

#include <stdexcept>
#include <string>

namespace valleysplit {

/// Thrown on violated preconditions (bad geometry, off-node interfaces, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by numerical kernels that fail (non-PD overlap, no convergence).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace valleysplit
