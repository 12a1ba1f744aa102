#pragma once

#include <stdexcept>
#include <string>

namespace rootpoly {

// Base for all exact-computation failures; the CLI maps these to exit code 3.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

struct division_error : math_error {
    explicit division_error(const std::string& what) : math_error(what) {}
};

// Exact division was requested but a nonzero remainder survived.
struct remainder_error : math_error {
    explicit remainder_error(const std::string& what) : math_error(what) {}
};

// Evaluation of a rational function at a true pole.  order >= 1.
struct pole_error : math_error {
    pole_error(const std::string& what, int order_) : math_error(what), order(order_) {}
    int order;
};

struct singular_error : math_error {
    explicit singular_error(const std::string& what) : math_error(what) {}
};

// Invalid domain input (non-dominant weight, negative multiplicity, ...).
struct domain_error : math_error {
    explicit domain_error(const std::string& what) : math_error(what) {}
};

}  // namespace rootpoly
