#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Bad input to a library entry point (unsorted partition, size mismatch, ...).
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Exact arithmetic could not proceed (division by zero, inexact series division).
struct arithmetic_error : std::domain_error {
    explicit arithmetic_error(const std::string& what) : std::domain_error(what) {}
};

// An internal cross-check failed; indicates a bug, not bad input.
struct consistency_error : std::logic_error {
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace hurwitz
