#include "plumbcalc/validation.hpp"

#include <string>

#include "plumbcalc/errors.hpp"

namespace plumbcalc {

void require_valid_shape(const PlumbingConfig& config) {
    if (config.chains.empty()) throw input_error("config has no chains");
    for (std::size_t i = 0; i < config.chains.size(); ++i) {
        const ChainSpec& chain = config.chains[i];
        const std::string label = "chain " + std::to_string(i + 1);
        if (chain.b.empty()) throw input_error(label + ": empty b list");
        if (chain.b.size() != chain.a.size())
            throw input_error(label + ": b has " + std::to_string(chain.b.size()) +
                              " entries but a has " + std::to_string(chain.a.size()));
        for (std::size_t j = 0; j < chain.b.size(); ++j) {
            if (chain.b[j] < 2)
                throw input_error(label + ": b[" + std::to_string(j + 1) + "] = " +
                                  to_string(chain.b[j]) + " must be >= 2");
            if (chain.a[j] < 1)
                throw input_error(label + ": a[" + std::to_string(j + 1) + "] = " +
                                  to_string(chain.a[j]) + " must be >= 1");
        }
    }
}

namespace detail {

std::vector<BigInt> laufer_cycle(const Matrix& form, long long iteration_cap) {
    const std::size_t n = form.size();
    std::vector<BigInt> z(n, BigInt(1));  // start from the reduced cycle
    auto dot_row = [&](std::size_t row) {
        BigInt acc = 0;
        for (std::size_t col = 0; col < n; ++col)
            if (z[col] != 0) acc += form[row][col] * z[col];
        return acc;
    };
    for (long long iter = 0; iter <= iteration_cap; ++iter) {
        bool bumped = false;
        for (std::size_t row = 0; row < n; ++row) {
            if (dot_row(row) > 0) {
                z[row] += 1;
                bumped = true;
                break;
            }
        }
        if (!bumped) return z;
    }
    throw internal_error("laufer_cycle: iteration cap exceeded; form is not negative definite");
}

}  // namespace detail

Cycle fundamental_cycle(const PlumbingConfig& config, std::size_t chain_index) {
    require_valid_shape(config);
    if (chain_index >= config.chain_count())
        throw input_error("fundamental_cycle: chain index out of range");
    const ChainSpec& chain = config.chains[chain_index];
    const std::size_t m = chain.length();

    Matrix form(m, std::vector<BigInt>(m, BigInt(0)));
    BigInt b_sum = 0;
    for (std::size_t j = 0; j < m; ++j) {
        form[j][j] = -chain.b[j];
        if (j + 1 < m) form[j][j + 1] = form[j + 1][j] = 1;
        b_sum += chain.b[j];
    }
    const BigInt cap = b_sum * BigInt(static_cast<long>(m));
    const long long cap_ll = cap.fits_slong_p() ? cap.get_si() : (1ll << 62);
    std::vector<BigInt> z = detail::laufer_cycle(form, cap_ll);

    Cycle out = zero_cycle(config);
    for (std::size_t j = 0; j < m; ++j) out.mult[config.flat_index(chain_index, j)] = z[j];
    return out;
}

BigInt cycle_genus(const PlumbingConfig& config, const Cycle& cycle) {
    const BigInt self = pairing(config, cycle, cycle);
    BigInt k_dot = 0;  // K.C_ij = b_ij - 2 by adjunction
    for (std::size_t i = 0; i < config.chain_count(); ++i)
        for (std::size_t j = 0; j < config.chains[i].length(); ++j)
            k_dot += cycle.mult[config.flat_index(i, j)] * (config.chains[i].b[j] - 2);
    const BigInt twice = self + k_dot;
    if (twice % 2 != 0) throw internal_error("cycle_genus: Z^2 + K.Z is odd");
    return 1 + twice / 2;
}

ValidationReport validate_config(const PlumbingConfig& config) {
    require_valid_shape(config);
    ValidationReport report;
    report.negative_definite = is_negative_definite(intersection_matrix(config));
    for (std::size_t i = 0; i < config.chain_count(); ++i) {
        ChainValidation cv;
        auto [n, q] = hirzebruch_jung(config.chains[i]);
        cv.hj_n = n;
        cv.hj_q = q;
        const Cycle z = fundamental_cycle(config, i);
        for (std::size_t j = 0; j < config.chains[i].length(); ++j)
            cv.fundamental_cycle.push_back(z.mult[config.flat_index(i, j)]);
        cv.genus = cycle_genus(config, z);
        cv.rational = (cv.genus == 0);
        report.chains.push_back(std::move(cv));
    }
    return report;
}

}  // namespace plumbcalc
