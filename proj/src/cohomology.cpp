#include "plumbcalc/cohomology.hpp"

#include <algorithm>
#include <cstddef>

#include "plumbcalc/errors.hpp"
#include "plumbcalc/intersection.hpp"
#include "plumbcalc/validation.hpp"

namespace plumbcalc {

std::pair<BigInt, BigInt> p1_cohomology(const BigInt& degree) {
    BigInt h0 = degree + 1;
    if (h0 < 0) h0 = 0;
    BigInt h1 = -degree - 1;
    if (h1 < 0) h1 = 0;
    return {h0, h1};
}

LineBundleDegreePair twist_degrees(const PlumbingConfig& config, const Cycle& twist,
                                   CurveRef component) {
    if (twist.mult.size() != config.curve_count())
        throw input_error("twist_degrees: twist size does not match config");
    const BigInt t = pairing_with_curve(config, twist, component);
    const BigInt& b = config.chains.at(component.chain).b.at(component.pos);
    return LineBundleDegreePair{2 + t, -b + t};
}

namespace {

struct CurveLookup {
    std::vector<CurveRef> by_flat;

    explicit CurveLookup(const PlumbingConfig& config) {
        for (std::size_t i = 0; i < config.chain_count(); ++i)
            for (std::size_t j = 0; j < config.chains[i].length(); ++j)
                by_flat.push_back(CurveRef{i, j});
    }
};

std::vector<std::size_t> materialize_order(const PlumbingConfig& config, const Cycle& target,
                                           const PeelOptions& options) {
    const std::size_t n = config.curve_count();
    std::vector<std::size_t> order;
    if (options.explicit_order) {
        order = *options.explicit_order;
        std::vector<BigInt> left = target.mult;
        BigInt remaining = target.total_multiplicity();
        if (BigInt(static_cast<long>(order.size())) != remaining)
            throw input_error("peel order length does not match target multiplicity");
        for (std::size_t flat : order) {
            if (flat >= n || left[flat] <= 0)
                throw input_error("peel order is not a valid peeling of the target");
            left[flat] -= 1;
        }
        return order;
    }
    // Canonical: exhaust curves in flat order; Reverse: backwards.
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t flat = options.order == PeelOrder::Canonical ? step : n - 1 - step;
        for (BigInt c = 0; c < target.mult[flat]; ++c) order.push_back(flat);
    }
    return order;
}

}  // namespace

CohomologyLedger peel_ledger(const PlumbingConfig& config, const Cycle& target,
                             const Cycle& twist_base, const PeelOptions& options) {
    require_valid_shape(config);
    if (target.mult.size() != config.curve_count() ||
        twist_base.mult.size() != config.curve_count())
        throw input_error("peel_ledger: cycle size does not match config");
    if (!target.is_effective() || target.is_zero())
        throw input_error("peel_ledger: target must be effective and nonzero");
    if (!twist_base.is_effective())
        throw input_error("peel_ledger: twist base must be effective");

    const CurveLookup lookup(config);
    const std::vector<std::size_t> order = materialize_order(config, target, options);

    struct StepData {
        BigInt d_T, d_N, h0q, h1q;
    };
    std::vector<StepData> data;
    data.reserve(order.size());

    CohomologyLedger ledger;
    Cycle remaining = target;
    Cycle twist = twist_base;
    BigInt euler = 0;
    for (std::size_t flat : order) {
        const CurveRef ref = lookup.by_flat[flat];
        const LineBundleDegreePair deg = twist_degrees(config, twist, ref);
        const auto [h0_T, h1_T] = p1_cohomology(deg.d_T);
        const auto [h0_N, h1_N] = p1_cohomology(deg.d_N);
        StepData sd{deg.d_T, deg.d_N, h0_T + h0_N, h1_T + h1_N};
        euler += deg.d_T + deg.d_N + 2;
        if (options.record_steps) {
            PeelStep step;
            step.component = ref;
            step.remaining = remaining;
            step.twist = twist;
            step.d_T = sd.d_T;
            step.d_N = sd.d_N;
            step.h0_step = sd.h0q;
            step.h1_step = sd.h1q;
            ledger.steps.push_back(std::move(step));
        }
        data.push_back(std::move(sd));
        remaining.mult[flat] -= 1;
        twist.mult[flat] -= 1;
    }

    // Accumulate from the innermost restriction outward. Each outer step
    // stacks a long exact sequence whose connecting map has rank between 0
    // and min(quotient h^0, accumulated h^1); the interval endpoints take
    // the two extremes.
    const std::size_t last = data.size() - 1;
    DimInterval h0{data[last].h0q, data[last].h0q};
    DimInterval h1{data[last].h1q, data[last].h1q};
    if (options.record_steps) ledger.steps[last].exact = true;
    for (std::size_t s = last; s-- > 0;) {
        const StepData& q = data[s];
        const BigInt rank_cap_hi = std::min(q.h0q, h1.hi);
        const BigInt rank_cap_lo = std::min(q.h0q, h1.lo);
        const bool exact = rank_cap_hi == 0;
        h0 = DimInterval{h0.lo + q.h0q - rank_cap_hi, h0.hi + q.h0q};
        h1 = DimInterval{h1.lo + q.h1q - rank_cap_lo, h1.hi + q.h1q};
        if (options.record_steps) ledger.steps[s].exact = exact;
    }

    ledger.h0_total = h0;
    ledger.h1_total = h1;
    ledger.euler_total = euler;
    return ledger;
}

std::vector<bool> check_component_h0_vanishing(const PlumbingConfig& config,
                                               const DivisorSolution& sol, long long n,
                                               PeelOrder order) {
    if (n < 1) throw input_error("check_component_h0_vanishing: n must be >= 1");
    const Cycle twist = scaled(divisor_part(config, sol), big_of(n));
    PeelOptions options;
    options.order = order;
    options.record_steps = false;
    std::vector<bool> out;
    out.reserve(config.curve_count());
    for (std::size_t flat = 0; flat < config.curve_count(); ++flat) {
        Cycle target = zero_cycle(config);
        target.mult[flat] = sol.x[flat];
        const CohomologyLedger ledger = peel_ledger(config, target, twist, options);
        out.push_back(ledger.h0_total == DimInterval{0, 0});
    }
    return out;
}

bool check_h0_reduced_E_vanishing(const PlumbingConfig& config, const DivisorSolution& sol,
                                  long long n, PeelOrder order) {
    if (n < 1) throw input_error("check_h0_reduced_E_vanishing: n must be >= 1");
    const Cycle e = divisor_part(config, sol);
    PeelOptions options;
    options.order = order;
    options.record_steps = false;
    const CohomologyLedger ledger = peel_ledger(config, e, scaled(e, big_of(n)), options);
    return ledger.h0_total == DimInterval{0, 0};
}

BigInt closed_form_h1_sum_m1(const BigInt& n, const BigInt& x, const BigInt& b) {
    BigInt total = 0;
    const BigInt upper = n * x;  // terms l = 0 .. nx-1
    for (BigInt l = 0; l < upper; ++l) total += 2 * n * x - 2 * l * b + b;
    return total;
}

BigInt alpha_bound(const BigInt& n, const BigInt& a1, const BigInt& x0, const BigInt& b1) {
    if (n < 1 || a1 < 1 || x0 < 1 || b1 < 1) throw input_error("alpha_bound: inputs must be positive");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), BigInt(n * a1 * x0 + 2).get_mpz_t(), b1.get_mpz_t());
    return q;
}

std::vector<Rational> quadratic_fit(const std::vector<long long>& n_values,
                                    const std::vector<BigInt>& y_values) {
    if (n_values.size() != y_values.size() || n_values.size() < 3)
        throw input_error("quadratic_fit: need at least 3 matching points");

    // Normal equations G c = t for regressors (n^2, n, 1), solved by Cramer.
    Rational g[3][3] = {};
    Rational t[3] = {};
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const BigInt n(static_cast<long>(n_values[i]));
        const BigInt u[3] = {n * n, n, BigInt(1)};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) g[r][c] += Rational(u[r] * u[c]);
            t[r] += Rational(u[r] * y_values[i]);
        }
    }
    // explicit return type: gmpxx expression templates must not outlive the
    // lambda body
    auto det3 = [](const Rational m[3][3]) -> Rational {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const Rational det = det3(g);
    if (det == 0) throw input_error("quadratic_fit: singular normal equations (need 3 distinct n)");

    std::vector<Rational> coeffs;
    for (int k = 0; k < 3; ++k) {
        Rational replaced[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) replaced[r][c] = (c == k) ? t[r] : g[r][c];
        coeffs.push_back(det3(replaced) / det);
    }
    return coeffs;
}

std::optional<std::size_t> positivity_threshold_index(const std::vector<BigInt>& second_diffs) {
    std::size_t start = second_diffs.size();
    while (start > 0 && second_diffs[start - 1] > 0) --start;
    if (start == second_diffs.size()) return std::nullopt;  // empty trailing run
    return start;
}

GrowthReport growth_analysis(const PlumbingConfig& config, const DivisorSolution& sol,
                             NRange n_range, PeelOrder order) {
    if (n_range.count() < 3)
        throw input_error("growth_analysis: n range must contain at least 3 points");
    if (n_range.lo < 1) throw input_error("growth_analysis: n must be >= 1");

    const Cycle e = divisor_part(config, sol);
    PeelOptions options;
    options.order = order;
    options.record_steps = false;

    GrowthReport report;
    for (long long n = n_range.lo; n <= n_range.hi; ++n) {
        const Cycle ne = scaled(e, big_of(n));
        const CohomologyLedger ledger = peel_ledger(config, ne, ne, options);
        report.n_values.push_back(n);
        report.h1_lo.push_back(ledger.h1_total.lo);
        report.h1_hi.push_back(ledger.h1_total.hi);
    }
    for (std::size_t i = 0; i + 2 < report.h1_lo.size(); ++i)
        report.second_differences.push_back(report.h1_lo[i + 2] - 2 * report.h1_lo[i + 1] +
                                            report.h1_lo[i]);

    const auto coeffs = quadratic_fit(report.n_values, report.h1_lo);
    report.quadratic_leading_coefficient = coeffs[0];
    report.quadratic_leading_coefficient_float = to_double(coeffs[0]);
    if (const auto idx = positivity_threshold_index(report.second_differences))
        report.threshold_n = report.n_values[*idx];
    return report;
}

std::vector<DiscrepancyRow> discrepancy_report(const PlumbingConfig& config,
                                               const DivisorSolution& sol, NRange n_range) {
    std::vector<DiscrepancyRow> rows;
    if (config.chain_count() != 1 || config.chains[0].length() != 1) return rows;
    if (sol.x.size() != 1) throw input_error("discrepancy_report: solution does not match config");

    const BigInt& b = config.chains[0].b[0];
    const BigInt& x = sol.x[0];
    PeelOptions options;
    options.record_steps = true;
    const Cycle e = divisor_part(config, sol);

    for (long long n = n_range.lo; n <= n_range.hi; ++n) {
        const Cycle ne = scaled(e, big_of(n));
        const CohomologyLedger ledger = peel_ledger(config, ne, ne, options);
        DiscrepancyRow row;
        row.n = n;
        row.engine_h1 = ledger.h1_total;
        row.closed_form_sum = closed_form_h1_sum_m1(big_of(n), x, b);
        row.difference = ledger.h1_total.lo - row.closed_form_sum;
        for (std::size_t l = 0; l < ledger.steps.size(); ++l) {
            const BigInt closed_form_step = 2 * big_of(n) * x - 2 * big_of(static_cast<long long>(l)) * b + b;
            if (ledger.steps[l].h1_step != closed_form_step)
                row.disagreeing_steps.push_back(static_cast<long long>(l));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace plumbcalc
