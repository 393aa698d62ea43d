#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace noether {

/// A configured resource cap was hit.  Never silently truncated.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Process-wide caps.  Set once at startup (CLI flags); read everywhere.
struct Limits {
    std::size_t max_gb_pairs = 20000;
    std::uint64_t max_gb_degree = 40;
    std::uint64_t trial_division_bound = 1000000;
    std::size_t max_elements = 10000000;
    std::size_t max_model_size = 1000000;
    std::size_t max_staircase = 200000;
};

Limits& limits();

/// Overrides the process-wide caps for the lifetime of the guard.
class ScopedLimits {
public:
    explicit ScopedLimits(const Limits& replacement) : saved_(limits()) { limits() = replacement; }
    ~ScopedLimits() { limits() = saved_; }
    ScopedLimits(const ScopedLimits&) = delete;
    ScopedLimits& operator=(const ScopedLimits&) = delete;

private:
    Limits saved_;
};

}  // namespace noether
