#pragma once

// Intersection matrices of plumbing configurations and the exact linear
// algebra on them: Sylvester's negative-definiteness test and the
// Hirzebruch-Jung continued fraction of a chain.

#include <cstddef>
#include <utility>
#include <vector>

#include "plumbcalc/config.hpp"
#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

using Matrix = std::vector<std::vector<BigInt>>;

// Symmetric block-tridiagonal matrix: diagonal -b_ij, entry 1 between
// consecutive curves of the same chain, 0 between chains.
struct IntersectionMatrix {
    Matrix entries;

    std::size_t size() const { return entries.size(); }

    bool operator==(const IntersectionMatrix&) const = default;
};

IntersectionMatrix intersection_matrix(const PlumbingConfig& config);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const Matrix& m);

// Sylvester criterion: leading principal minors alternate in sign starting
// negative. Any zero minor fails.
bool is_negative_definite(const Matrix& m);
bool is_negative_definite(const IntersectionMatrix& m);

// Intersection number A.B under the configuration's form. Works for cycles
// with negative entries. O(curves), uses tridiagonal structure directly.
BigInt pairing(const PlumbingConfig& config, const Cycle& lhs, const Cycle& rhs);

// Intersection number of a cycle with a single curve.
BigInt pairing_with_curve(const PlumbingConfig& config, const Cycle& cycle, CurveRef curve);

// Hirzebruch-Jung continued fraction b_1 - 1/(b_2 - 1/(... - 1/b_m)) of one
// chain, returned as coprime (n, q) with n > q >= 1.
std::pair<BigInt, BigInt> hirzebruch_jung(const ChainSpec& chain);

}  // namespace plumbcalc
