#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modrep/cyclotomic.hpp"

namespace modrep {

struct Check {
    std::string name;
    bool passed = false;
    std::string witness;
};

/// Structured result of a verification run. Each named check corresponds to
/// one mathematical claim; discovered scalars and dimensions ride along.
struct VerifyReport {
    i64 prime = 0;
    std::vector<Check> checks;
    std::optional<i64> commutant_dim;
    std::optional<std::pair<i64, i64>> parity_dims;
    std::optional<CycNum> proportionality_constant;

    void add(std::string name, bool passed, std::string witness = "") {
        checks.push_back({std::move(name), passed, std::move(witness)});
    }

    void merge(const VerifyReport& other, const std::string& prefix = "") {
        for (const auto& c : other.checks)
            checks.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.passed, c.witness});
        if (other.commutant_dim) commutant_dim = other.commutant_dim;
        if (other.parity_dims) parity_dims = other.parity_dims;
        if (other.proportionality_constant)
            proportionality_constant = other.proportionality_constant;
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Raised when an exact computation would exceed the configured size bound.
class ResourceGuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when no lift scalars exist in the working field.
class LiftError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace modrep
