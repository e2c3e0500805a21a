#pragma once

#include <stdexcept>
#include <string>

namespace zetacount {

// Evaluation requested outside the supported height window.
struct window_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A power in f_N exceeded the overflow guard.
struct overflow_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration file could not be parsed; line is 1-based, 0 if not applicable.
struct config_error : std::runtime_error {
    int line;
    config_error(const std::string& what, int line_ = 0)
        : std::runtime_error(what), line(line_) {}
};

// Zero list does not cover the requested height.
struct coverage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contour parameters violate the admissibility chain.
struct constraint_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zetacount
