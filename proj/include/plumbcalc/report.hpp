#pragma once

// Machine-readable run reports. JSON carries every exact number as a decimal
// string; CSV emits one file per tabular section. Output is byte-stable for
// identical inputs: no timestamps, metadata carries a hash of the input text.

#include <string>
#include <vector>

#include "plumbcalc/cohomology.hpp"
#include "plumbcalc/config.hpp"
#include "plumbcalc/parse.hpp"
#include "plumbcalc/solver.hpp"
#include "plumbcalc/validation.hpp"

namespace plumbcalc {

inline constexpr const char* kToolName = "plumbcalc";
inline constexpr const char* kToolVersion = "0.1.0";

struct ReportMetadata {
    std::string tool;
    std::string version;
    std::string input_hash;
    std::string peel_order;

    bool operator==(const ReportMetadata&) const = default;
};

struct SolutionSection {
    BigInt x0;
    std::vector<BigInt> x;              // flat per curve
    std::vector<BigInt> orthogonality;  // L.C residual per curve

    bool operator==(const SolutionSection&) const = default;
};

struct LedgerSummary {
    long long n = 0;
    DimInterval h0;
    DimInterval h1;
    BigInt euler;
    std::vector<bool> component_vanishing;  // flat per curve
    bool reduced_e_vanishing = false;
    std::vector<PeelStep> steps;

    bool operator==(const LedgerSummary&) const = default;
};

struct RunReport {
    ReportMetadata metadata;
    PlumbingConfig config;
    ValidationReport validation;
    SolutionSection solution;
    NRange n_range;
    std::vector<LedgerSummary> per_n;
    GrowthReport growth;
    std::vector<DiscrepancyRow> discrepancy;

    bool operator==(const RunReport&) const = default;
};

// Runs validation, the solver, per-n ledgers and vanishing checks, the growth
// sweep and the discrepancy table over `n_range`.
RunReport build_run_report(const PlumbingConfig& config, const std::string& input_text,
                           NRange n_range, PeelOrder order = PeelOrder::Canonical);

std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& json_text);

// Writes <prefix>_validation.csv, _solution.csv, _vanishing.csv, _growth.csv,
// _discrepancy.csv. Returns the paths written.
std::vector<std::string> report_to_csv(const RunReport& report, const std::string& prefix);

}  // namespace plumbcalc
