#pragma once

// The acceptance suite: nine criteria, each a list of named worst-case
// residuals over its parameter grid.

#include "phlab/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phlab {

struct SuiteOptions {
    std::uint64_t seed = 42;
    // Replaces every residual threshold when set; nontriviality floors are kept.
    std::optional<double> tolerance;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    CheckReport report;

    bool passed() const { return report.all_passed(); }
};

CriterionResult criterion_kmu_nullity(const SuiteOptions& options);
CriterionResult criterion_webster_routes(const SuiteOptions& options);
CriterionResult criterion_bochner_kmu(const SuiteOptions& options);
CriterionResult criterion_space_forms(const SuiteOptions& options);
CriterionResult criterion_symmetry(const SuiteOptions& options);
CriterionResult criterion_tangent_sphere_bundles(const SuiteOptions& options);
CriterionResult criterion_radius_sweeps(const SuiteOptions& options);
CriterionResult criterion_kaehler_base(const SuiteOptions& options);
// Classifier checks only; run_acceptance_suite adds the whole-suite outcome.
CriterionResult criterion_classifier(const SuiteOptions& options);

// All nine criteria in order. Criterion 9 additionally requires criteria 1-8 to pass.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options = {});

std::size_t total_checks(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace phlab
