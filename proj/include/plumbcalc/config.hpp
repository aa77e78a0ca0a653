#pragma once

// Plumbing configurations: disjoint linear chains of rational curves.
// A chain is described by the negated self-intersections b_j >= 2 and the
// ample intersection numbers a_j = H.C_j >= 1 of its curves.

#include <cstddef>
#include <vector>

#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

struct ChainSpec {
    std::vector<BigInt> b;  // C_j^2 = -b_j, each b_j >= 2
    std::vector<BigInt> a;  // a_j = H.C_j >= 1, same length as b

    std::size_t length() const { return b.size(); }

    bool operator==(const ChainSpec&) const = default;
};

struct PlumbingConfig {
    std::vector<ChainSpec> chains;

    std::size_t chain_count() const { return chains.size(); }

    std::size_t curve_count() const {
        std::size_t n = 0;
        for (const auto& c : chains) n += c.length();
        return n;
    }

    // Flat index of curve (chain, pos), both 0-based, over the curve order
    // chain 0 first, positions in order.
    std::size_t flat_index(std::size_t chain, std::size_t pos) const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < chain; ++i) n += chains[i].length();
        return n + pos;
    }

    bool operator==(const PlumbingConfig&) const = default;
};

// Reference to one curve of a configuration, 0-based.
struct CurveRef {
    std::size_t chain = 0;
    std::size_t pos = 0;

    bool operator==(const CurveRef&) const = default;
};

// An integer combination of the configuration's curves, stored flat in curve
// order. Effective cycles have all multiplicities >= 0; twists arising inside
// peeling may carry negative entries.
struct Cycle {
    std::vector<BigInt> mult;

    bool is_effective() const {
        for (const BigInt& m : mult)
            if (m < 0) return false;
        return true;
    }

    bool is_zero() const {
        for (const BigInt& m : mult)
            if (m != 0) return false;
        return true;
    }

    BigInt total_multiplicity() const {
        BigInt t = 0;
        for (const BigInt& m : mult) t += m;
        return t;
    }

    bool operator==(const Cycle&) const = default;
};

inline Cycle zero_cycle(const PlumbingConfig& config) {
    return Cycle{std::vector<BigInt>(config.curve_count(), BigInt(0))};
}

inline Cycle scaled(const Cycle& c, const BigInt& k) {
    Cycle out = c;
    for (BigInt& m : out.mult) m *= k;
    return out;
}

}  // namespace plumbcalc
