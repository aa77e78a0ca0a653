#include "plumbcalc/intersection.hpp"

#include "plumbcalc/errors.hpp"

namespace plumbcalc {

IntersectionMatrix intersection_matrix(const PlumbingConfig& config) {
    const std::size_t n = config.curve_count();
    Matrix m(n, std::vector<BigInt>(n, BigInt(0)));
    std::size_t base = 0;
    for (const ChainSpec& chain : config.chains) {
        const std::size_t len = chain.length();
        for (std::size_t j = 0; j < len; ++j) {
            m[base + j][base + j] = -chain.b[j];
            if (j + 1 < len) {
                m[base + j][base + j + 1] = 1;
                m[base + j + 1][base + j] = 1;
            }
        }
        base += len;
    }
    return IntersectionMatrix{std::move(m)};
}

BigInt determinant(const Matrix& input) {
    const std::size_t n = input.size();
    if (n == 0) return 1;
    Matrix m = input;
    BigInt prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        // Bareiss step: exact division by the previous pivot keeps entries
        // at determinant scale.
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
            }
            m[i][k] = 0;
        }
        prev_pivot = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

bool is_negative_definite(const Matrix& m) {
    const std::size_t n = m.size();
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix leading(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) leading[i][j] = m[i][j];
        const BigInt minor = determinant(leading);
        const bool want_negative = (k % 2 == 1);
        if (want_negative ? minor >= 0 : minor <= 0) return false;
    }
    return true;
}

bool is_negative_definite(const IntersectionMatrix& m) {
    return is_negative_definite(m.entries);
}

BigInt pairing_with_curve(const PlumbingConfig& config, const Cycle& cycle, CurveRef curve) {
    const ChainSpec& chain = config.chains.at(curve.chain);
    const std::size_t flat = config.flat_index(curve.chain, curve.pos);
    BigInt t = -chain.b[curve.pos] * cycle.mult[flat];
    if (curve.pos > 0) t += cycle.mult[flat - 1];
    if (curve.pos + 1 < chain.length()) t += cycle.mult[flat + 1];
    return t;
}

BigInt pairing(const PlumbingConfig& config, const Cycle& lhs, const Cycle& rhs) {
    BigInt total = 0;
    for (std::size_t i = 0; i < config.chain_count(); ++i)
        for (std::size_t j = 0; j < config.chains[i].length(); ++j) {
            const std::size_t flat = config.flat_index(i, j);
            if (lhs.mult[flat] != 0)
                total += lhs.mult[flat] * pairing_with_curve(config, rhs, CurveRef{i, j});
        }
    return total;
}

std::pair<BigInt, BigInt> hirzebruch_jung(const ChainSpec& chain) {
    if (chain.length() == 0) throw input_error("hirzebruch_jung: empty chain");
    Rational r(chain.b.back());
    for (std::size_t j = chain.length() - 1; j-- > 0;) {
        // b_j - 1/r; r > 1 throughout since every b >= 2
        r = Rational(chain.b[j]) - make_rational(1, 1) / r;
    }
    return {r.get_num(), r.get_den()};
}

}  // namespace plumbcalc
