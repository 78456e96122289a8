#pragma once

#include <stdexcept>
#include <string>

namespace dulac {

// Base class for all mathematical failures (as opposed to usage errors).
// CLI maps these to exit code 1, usage problems to exit code 2.
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct order_mismatch : math_error {
    order_mismatch(int a, int b)
        : math_error("truncation order mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct mode_mismatch : math_error {
    mode_mismatch() : math_error("mixed exact/float coefficient modes in one operation") {}
};

struct division_failure : math_error {
    using math_error::math_error;
};

// Named small divisor: the recurrence hit |a*l1 + b*l2| below the floor.
struct small_divisor : math_error {
    int a, b;
    small_divisor(int a_, int b_)
        : math_error("small divisor at monomial x^" + std::to_string(a_) + " y^" + std::to_string(b_)),
          a(a_), b(b_) {}
};

struct degenerate_input : math_error {
    using math_error::math_error;
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dulac
