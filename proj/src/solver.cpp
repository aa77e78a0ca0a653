#include "plumbcalc/solver.hpp"

#include <algorithm>
#include <cstddef>

#include "plumbcalc/errors.hpp"
#include "plumbcalc/validation.hpp"

namespace plumbcalc {

BlockSystem build_block_system(const PlumbingConfig& config) {
    require_valid_shape(config);
    const std::size_t n = config.curve_count();
    Matrix rows(n, std::vector<BigInt>(n + 1, BigInt(0)));
    std::size_t base = 0;
    for (const ChainSpec& chain : config.chains) {
        const std::size_t len = chain.length();
        for (std::size_t j = 0; j < len; ++j) {
            rows[base + j][base + j] = -chain.b[j];
            if (j > 0) rows[base + j][base + j - 1] = 1;
            if (j + 1 < len) rows[base + j][base + j + 1] = 1;
            rows[base + j][n] = chain.a[j];
        }
        base += len;
    }
    return BlockSystem{std::move(rows)};
}

namespace {

// Scale to integer entries with gcd 1 and positive last nonzero entry.
std::vector<Rational> normalize_basis_vector(const std::vector<Rational>& v) {
    std::vector<BigInt> prim = primitive_integer_vector(v);
    int flip = 1;
    for (std::size_t i = prim.size(); i-- > 0;) {
        if (prim[i] != 0) {
            flip = prim[i] < 0 ? -1 : 1;
            break;
        }
    }
    std::vector<Rational> out;
    out.reserve(prim.size());
    for (const BigInt& x : prim) out.emplace_back(flip * x);
    return out;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const BlockSystem& system) {
    const std::size_t rows = system.row_count();
    const std::size_t cols = system.col_count();
    Matrix m = system.rows;

    // Fraction-free (Bareiss) reduction to row echelon form with column
    // pivot tracking.
    std::vector<std::size_t> pivot_col_of_row;
    BigInt prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(m[rank], m[pivot_row]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev_pivot;
            m[i][col] = 0;
        }
        prev_pivot = m[rank][col];
        pivot_col_of_row.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot_col(cols, false);
    for (std::size_t c : pivot_col_of_row) is_pivot_col[c] = true;

    // One basis vector per free column, by rational back-substitution.
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = rank; r-- > 0;) {
            const std::size_t pc = pivot_col_of_row[r];
            Rational acc(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (m[r][j] != 0 && v[j] != 0) acc += Rational(m[r][j]) * v[j];
            v[pc] = -acc / Rational(m[r][pc]);
        }
        basis.push_back(normalize_basis_vector(v));
    }
    return basis;
}

DivisorSolution primitive_positive_solution(const PlumbingConfig& config) {
    require_valid_shape(config);
    const BlockSystem system = build_block_system(config);
    const auto basis = kernel_basis(system);
    if (basis.size() != 1)
        throw internal_error("primitive_positive_solution: kernel dimension is " +
                             std::to_string(basis.size()) + ", expected 1");

    std::vector<BigInt> v = primitive_integer_vector(basis[0]);
    const std::size_t n = config.curve_count();
    if (v.back() < 0)
        for (BigInt& x : v) x = -x;  // orient so x0 > 0
    for (const BigInt& x : v)
        if (x < 1)
            throw internal_error(
                "primitive_positive_solution: kernel vector has a non-positive entry");

    DivisorSolution sol;
    sol.x0 = v[n];
    sol.x.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    return sol;
}

std::vector<BigInt> verify_orthogonality(const PlumbingConfig& config,
                                         const DivisorSolution& sol) {
    if (sol.x.size() != config.curve_count())
        throw input_error("verify_orthogonality: solution size does not match config");
    std::vector<BigInt> residuals;
    residuals.reserve(config.curve_count());
    for (std::size_t i = 0; i < config.chain_count(); ++i) {
        const ChainSpec& chain = config.chains[i];
        for (std::size_t j = 0; j < chain.length(); ++j) {
            const std::size_t flat = config.flat_index(i, j);
            BigInt r = sol.x0 * chain.a[j] - chain.b[j] * sol.x[flat];
            if (j > 0) r += sol.x[flat - 1];
            if (j + 1 < chain.length()) r += sol.x[flat + 1];
            residuals.push_back(std::move(r));
        }
    }
    return residuals;
}

std::vector<BigInt> closed_form_small_m(const std::vector<BigInt>& b,
                                        const std::vector<BigInt>& a) {
    if (b.size() != a.size()) throw input_error("closed_form_small_m: length mismatch");
    if (b.size() == 1) return {b[0], a[0]};
    if (b.size() == 2)
        return {b[0] * b[1] - 1, a[0] * b[1] + a[1], a[0] + a[1] * b[0]};
    throw input_error("closed_form_small_m: only m = 1 or m = 2 supported");
}

Cycle divisor_part(const PlumbingConfig& config, const DivisorSolution& sol) {
    if (sol.x.size() != config.curve_count())
        throw input_error("divisor_part: solution size does not match config");
    return Cycle{sol.x};
}

}  // namespace plumbcalc
