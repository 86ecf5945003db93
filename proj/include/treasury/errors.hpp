#pragma once

#include <stdexcept>

namespace treasury {

/// Rejected caller input: wrong sizes, non-positive quantities, malformed files.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Mathematically invalid parameter region, e.g. a non-positive discount rate.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace treasury
