#pragma once

// The block linear system whose kernel defines the divisor L = x0*H + E with
// L.C_ij = 0 for every curve, and the primitive positive integer solution.

#include <cstddef>
#include <vector>

#include "plumbcalc/config.hpp"
#include "plumbcalc/intersection.hpp"
#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

// Sum(m_i) rows by Sum(m_i)+1 columns: the chain blocks on the diagonal and
// the ample column a_ij stacked last. Column order (x_11, ..., x_km_k, x0).
struct BlockSystem {
    Matrix rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }

    bool operator==(const BlockSystem&) const = default;
};

BlockSystem build_block_system(const PlumbingConfig& config);

// Exact nullspace basis via fraction-free Gaussian elimination followed by
// rational back-substitution. Each basis vector is scaled to a primitive
// integer vector whose last nonzero entry is positive (returned as
// rationals with denominator 1). Empty when the kernel is trivial.
std::vector<std::vector<Rational>> kernel_basis(const BlockSystem& system);

struct DivisorSolution {
    BigInt x0;
    std::vector<BigInt> x;  // flat, one entry per curve

    bool operator==(const DivisorSolution&) const = default;
};

// The unique primitive integer kernel vector with every entry positive.
// Throws internal_error if the kernel is not one-dimensional or admits no
// positive orientation (impossible for valid configs).
DivisorSolution primitive_positive_solution(const PlumbingConfig& config);

// Residuals L.C_ij = x0*a_ij + x_{i,j-1} - b_ij*x_ij + x_{i,j+1}, flat per
// curve. All zero exactly when the candidate solves the system; nonzero
// entries are data, not errors.
std::vector<BigInt> verify_orthogonality(const PlumbingConfig& config, const DivisorSolution& sol);

// The short-chain coefficient vectors, unnormalized:
//   m = 1: (x0, x1) = (b1, a1)
//   m = 2: (x0, x1, x2) = (b1*b2 - 1, a1*b2 + a2, a1 + a2*b1)
// Rejects any other length.
std::vector<BigInt> closed_form_small_m(const std::vector<BigInt>& b, const std::vector<BigInt>& a);

// E = sum x_ij C_ij as a cycle over the configuration.
Cycle divisor_part(const PlumbingConfig& config, const DivisorSolution& sol);

}  // namespace plumbcalc
