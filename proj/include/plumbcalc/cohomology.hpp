#pragma once

// Dimension bookkeeping for the twisted tangent sheaf restricted to effective
// cycles on the chains. Restrictions to a rational curve split into a tangent
// and a normal line-bundle summand; peeling one reduced curve at a time off a
// cycle drives an exact recursion whose only ambiguity is the rank of the
// connecting map in each long exact sequence. Dimensions are therefore
// tracked as intervals that collapse to points whenever every quotient h^0
// vanishes.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "plumbcalc/config.hpp"
#include "plumbcalc/numeric.hpp"
#include "plumbcalc/solver.hpp"

namespace plumbcalc {

// Degrees of the two line-bundle summands on one component: tangent-direction
// d_T and normal-direction d_N. Always d_T - d_N = 2 + b for that component.
struct LineBundleDegreePair {
    BigInt d_T;
    BigInt d_N;

    bool operator==(const LineBundleDegreePair&) const = default;
};

struct DimInterval {
    BigInt lo;
    BigInt hi;

    bool is_point() const { return lo == hi; }

    bool contains(const BigInt& v) const { return lo <= v && v <= hi; }

    bool operator==(const DimInterval&) const = default;
};

struct PeelStep {
    CurveRef component;
    Cycle remaining;  // cycle being restricted to at this step
    Cycle twist;      // twist divisor at this step (entries may be negative)
    BigInt d_T;
    BigInt d_N;
    BigInt h0_step;  // dimensions of the quotient on the peeled component
    BigInt h1_step;
    bool exact = false;  // accumulation at this step had forced rank zero

    bool operator==(const PeelStep&) const = default;
};

struct CohomologyLedger {
    std::vector<PeelStep> steps;  // peeling order; empty when not recorded
    DimInterval h0_total;
    DimInterval h1_total;
    BigInt euler_total;  // exact; equals sum of (d_T + 1) + (d_N + 1)

    bool operator==(const CohomologyLedger&) const = default;
};

enum class PeelOrder { Canonical, Reverse };

struct PeelOptions {
    PeelOrder order = PeelOrder::Canonical;
    // Explicit peeling sequence (flat curve indices, one per copy); overrides
    // `order` when set. Used by order-exhaustive tests.
    std::optional<std::vector<std::size_t>> explicit_order;
    // Per-step snapshots are skipped in bulk sweeps.
    bool record_steps = true;
};

// h^0 and h^1 of a degree-d line bundle on the rational curve:
// h0 = max(0, d+1), h1 = max(0, -d-1); h0 - h1 = d + 1 always.
std::pair<BigInt, BigInt> p1_cohomology(const BigInt& degree);

// Summand degrees on `component` after twisting by `twist`:
// d_T = 2 + twist.C, d_N = -b + twist.C.
LineBundleDegreePair twist_degrees(const PlumbingConfig& config, const Cycle& twist,
                                   CurveRef component);

// Peels `target` one reduced component per step (canonical order: exhaust the
// first curve of the first chain, then the next curve, ...), starting from
// twist `twist_base` and lowering the twist by each peeled component. The
// h^0/h^1 intervals accumulate through the long exact sequences with the
// connecting rank bounded by min(quotient h^0, accumulated h^1); the Euler
// total is exact regardless.
CohomologyLedger peel_ledger(const PlumbingConfig& config, const Cycle& target,
                             const Cycle& twist_base, const PeelOptions& options = {});

// For each curve: does h^0 of the twisted sheaf on x_ij*C_ij with twist n*E
// vanish exactly (interval [0,0])? Flat per curve.
std::vector<bool> check_component_h0_vanishing(const PlumbingConfig& config,
                                               const DivisorSolution& sol, long long n,
                                               PeelOrder order = PeelOrder::Canonical);

// Same question for the full divisor part E (multiplicities x_ij) under
// twist n*E.
bool check_h0_reduced_E_vanishing(const PlumbingConfig& config, const DivisorSolution& sol,
                                  long long n, PeelOrder order = PeelOrder::Canonical);

// The literal single-chain, single-curve sum  Sum_{l=0}^{nx-1} (2nx - 2lb + b),
// used as the comparison column in discrepancy reports.
BigInt closed_form_h1_sum_m1(const BigInt& n, const BigInt& x, const BigInt& b);

// floor((n*a1*x0 + 2) / b1).
BigInt alpha_bound(const BigInt& n, const BigInt& a1, const BigInt& x0, const BigInt& b1);

struct GrowthReport {
    std::vector<long long> n_values;
    std::vector<BigInt> h1_lo;
    std::vector<BigInt> h1_hi;
    std::vector<BigInt> second_differences;  // of h1_lo; length = points - 2
    Rational quadratic_leading_coefficient;  // exact least-squares fit on (n^2, n, 1)
    double quadratic_leading_coefficient_float = 0.0;
    std::optional<long long> threshold_n;  // start of the trailing positive run
                                           // of second differences, if any

    bool operator==(const GrowthReport&) const = default;
};

// Inclusive n-range; empty when lo > hi.
struct NRange {
    long long lo = 0;
    long long hi = -1;

    long long count() const { return hi < lo ? 0 : hi - lo + 1; }

    bool operator==(const NRange&) const = default;
};

// Ledgers for target nE / twist nE across the range (at least 4 points),
// with second differences of h1_lo and an exact quadratic fit.
GrowthReport growth_analysis(const PlumbingConfig& config, const DivisorSolution& sol,
                             NRange n_range, PeelOrder order = PeelOrder::Canonical);

// Exact least-squares fit y ~ c2*n^2 + c1*n + c0 over the rationals;
// returns (c2, c1, c0). Requires at least 3 distinct n.
std::vector<Rational> quadratic_fit(const std::vector<long long>& n_values,
                                    const std::vector<BigInt>& y_values);

// Trailing run of strictly positive second differences: index of its first
// element, or nullopt when the run is empty.
std::optional<std::size_t> positivity_threshold_index(const std::vector<BigInt>& second_diffs);

struct DiscrepancyRow {
    long long n = 0;
    DimInterval engine_h1;
    BigInt closed_form_sum;    // Sum_{l=0}^{nx-1} (2nx - 2lb + b)
    BigInt difference;   // engine_h1.lo - closed_form_sum
    std::vector<long long> disagreeing_steps;  // l where per-step h1 differs
                                               // from 2nx - 2lb + b

    bool operator==(const DiscrepancyRow&) const = default;
};

// Cross-validation table for single-curve configurations (k = 1, m = 1):
// engine h^1 of target nE next to the closed-form sum, per n. Empty for
// any other configuration shape or an empty range.
std::vector<DiscrepancyRow> discrepancy_report(const PlumbingConfig& config,
                                               const DivisorSolution& sol, NRange n_range);

}  // namespace plumbcalc
