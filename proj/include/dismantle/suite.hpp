#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dismantle/io.hpp"

namespace dismantle {

struct CriterionResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail; // first counterexample, or a summary
    Json evidence = Json::object();
    double seconds = 0; // wall time; kept out of the JSON report
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    std::vector<std::string> only; // empty: every criterion
    /// "p4" adds a corrupted projection fixture to P4.
    std::optional<std::string> inject_fault;
    std::function<void(const CriterionResult&)> on_result;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;

    bool passed() const;
    /// Deterministic: timing is omitted.
    Json to_json() const;
};

/// P1 .. P10 in order.
std::vector<std::string> criterion_ids();

/// Runs one of P1 .. P9.
CriterionResult run_criterion(const std::string& id, const SuiteOptions& options);

/// Runs the selection in order. P10 reruns the other selected criteria (all
/// of P1 .. P9 when P10 is selected alone) and compares the serialised
/// reports byte for byte. Throws Error(invalid_input) for an empty or
/// unknown selection.
SuiteReport run_suite(const SuiteOptions& options);

/// Deterministic per-purpose seed derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

} // namespace dismantle
