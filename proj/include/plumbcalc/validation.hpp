#pragma once

// Validation of the standing assumptions on a plumbing configuration:
// contractibility (negative definite form) and rationality of the resulting
// singular points (Artin: p_a of the fundamental cycle is zero).

#include <cstddef>
#include <vector>

#include "plumbcalc/config.hpp"
#include "plumbcalc/intersection.hpp"
#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

struct ChainValidation {
    BigInt hj_n;  // Hirzebruch-Jung invariant n/q of the chain
    BigInt hj_q;
    std::vector<BigInt> fundamental_cycle;  // multiplicities along the chain
    BigInt genus;                            // p_a of the fundamental cycle
    bool rational = false;                   // genus == 0

    bool operator==(const ChainValidation&) const = default;
};

struct ValidationReport {
    bool negative_definite = false;
    std::vector<ChainValidation> chains;

    bool all_rational() const {
        for (const auto& c : chains)
            if (!c.rational) return false;
        return true;
    }

    bool operator==(const ValidationReport&) const = default;
};

// Rejects malformed configs (b < 2, a < 1, empty or mismatched chains) with
// an input_error naming the offending field; otherwise reports negative
// definiteness, per-chain Hirzebruch-Jung invariants, fundamental cycles and
// their arithmetic genera.
ValidationReport validate_config(const PlumbingConfig& config);

// Throws input_error naming the first offending field, or returns silently.
void require_valid_shape(const PlumbingConfig& config);

// Laufer's algorithm on one chain: the minimal effective cycle Z with
// Z.C_j <= 0 for all j, starting from the reduced cycle. The iteration cap
// (sum b_j) * m trips only on forms that are not negative definite.
Cycle fundamental_cycle(const PlumbingConfig& config, std::size_t chain_index);

// p_a(Z) = 1 + (Z^2 + K.Z)/2 with K.C_ij = b_ij - 2 from adjunction.
BigInt cycle_genus(const PlumbingConfig& config, const Cycle& cycle);

namespace detail {
// Laufer increment loop over an arbitrary symmetric matrix; exposed so the
// iteration cap can be exercised on non-negative-definite input.
std::vector<BigInt> laufer_cycle(const Matrix& form, long long iteration_cap);
}  // namespace detail

}  // namespace plumbcalc
