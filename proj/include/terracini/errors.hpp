#pragma once

#include <stdexcept>
#include <string>

namespace terracini {

/// Malformed spec strings, invalid construction parameters, shape mismatches.
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// A randomized computation failed an internal consistency check even after
/// retrying (iteration cap exceeded, dichotomy violated, degenerate samples).
class SamplingPathology : public std::runtime_error {
public:
    explicit SamplingPathology(const std::string& what) : std::runtime_error(what) {}
};

} // namespace terracini
