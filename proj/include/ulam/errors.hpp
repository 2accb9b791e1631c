#pragma once

#include <stdexcept>
#include <string>

namespace ulam {

// Raised when a requested computation would exceed the configured memory cap.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an affine model cannot be fitted to the supplied sequences.
struct FitError : std::runtime_error {
    explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a seed set is degenerate (some seed is generated by the others).
struct DegenerateSeedError : std::invalid_argument {
    explicit DegenerateSeedError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a cache file is malformed or inconsistent with the sequence rule.
struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ulam
