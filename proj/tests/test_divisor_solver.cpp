#include <doctest.h>

#include <random>

#include "plumbcalc/errors.hpp"
#include "plumbcalc/solver.hpp"
#include "test_support.hpp"

using namespace plumbcalc;
using plumbcalc::testing::chain;
using plumbcalc::testing::config;

TEST_SUITE_BEGIN("divisor-solver");

TEST_CASE("block system layout") {
    const auto s1 = build_block_system(config({chain({3}, {2})}));
    CHECK(s1.rows == Matrix{{BigInt(-3), BigInt(2)}});

    const auto s2 = build_block_system(config({chain({2, 2}, {1, 1})}));
    CHECK(s2.rows == Matrix{{BigInt(-2), BigInt(1), BigInt(1)},
                            {BigInt(1), BigInt(-2), BigInt(1)}});

    const auto s3 = build_block_system(config({chain({2}, {1}), chain({3}, {1})}));
    CHECK(s3.rows == Matrix{{BigInt(-2), BigInt(0), BigInt(1)},
                            {BigInt(0), BigInt(-3), BigInt(1)}});
}

TEST_CASE("kernel basis of the fixture systems") {
    const auto k1 = kernel_basis(build_block_system(config({chain({3}, {2})})));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == std::vector<Rational>{Rational(2), Rational(3)});

    const auto k2 = kernel_basis(build_block_system(config({chain({2, 2}, {1, 1})})));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});

    const auto k3 = kernel_basis(build_block_system(config({chain({2}, {1}), chain({3}, {1})})));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0] == std::vector<Rational>{Rational(3), Rational(2), Rational(6)});
}

TEST_CASE("kernel basis of a full-rank square system is empty") {
    BlockSystem square;
    square.rows = Matrix{{BigInt(-2), BigInt(1)}, {BigInt(1), BigInt(-2)}};
    CHECK(kernel_basis(square).empty());
}

TEST_CASE("primitive positive solutions of the short-chain fixtures") {
    const auto s1 = primitive_positive_solution(config({chain({3}, {2})}));
    CHECK(s1.x0 == 3);
    CHECK(s1.x == std::vector<BigInt>{2});

    const auto s2 = primitive_positive_solution(config({chain({2, 2}, {1, 1})}));
    CHECK(s2.x0 == 1);
    CHECK(s2.x == std::vector<BigInt>{1, 1});

    const auto s3 = primitive_positive_solution(config({chain({2}, {1})}));
    CHECK(s3.x0 == 2);
    CHECK(s3.x == std::vector<BigInt>{1});
}

TEST_CASE("orthogonality residuals") {
    const auto cfg = config({chain({3}, {2})});
    CHECK(verify_orthogonality(cfg, DivisorSolution{BigInt(3), {BigInt(2)}}) ==
          std::vector<BigInt>{0});

    const auto cfg22 = config({chain({2, 2}, {1, 1})});
    CHECK(verify_orthogonality(cfg22, DivisorSolution{BigInt(1), {BigInt(1), BigInt(1)}}) ==
          std::vector<BigInt>{0, 0});

    // deliberately wrong candidate is reported, not rejected
    const auto cfg2 = config({chain({2}, {1})});
    CHECK(verify_orthogonality(cfg2, DivisorSolution{BigInt(1), {BigInt(1)}}) ==
          std::vector<BigInt>{-1});
}

TEST_CASE("closed forms for short chains") {
    CHECK(closed_form_small_m({BigInt(5)}, {BigInt(3)}) == std::vector<BigInt>{5, 3});
    CHECK(closed_form_small_m({BigInt(2), BigInt(3)}, {BigInt(1), BigInt(2)}) ==
          std::vector<BigInt>{5, 5, 5});
    CHECK(closed_form_small_m({BigInt(2), BigInt(2)}, {BigInt(1), BigInt(1)}) ==
          std::vector<BigInt>{3, 3, 3});
    CHECK_THROWS_AS(closed_form_small_m({BigInt(2), BigInt(2), BigInt(2)},
                                        {BigInt(1), BigInt(1), BigInt(1)}),
                    input_error);
}

namespace {

std::vector<BigInt> full_vector(const DivisorSolution& sol) {
    std::vector<BigInt> v = sol.x;
    v.push_back(sol.x0);
    return v;
}

}  // namespace

TEST_CASE("solver properties on random configs") {
    std::mt19937_64 rng(424242);
    plumbcalc::testing::ConfigFamily family;
    for (int trial = 0; trial < 80; ++trial) {
        const auto cfg = plumbcalc::testing::random_config(rng, family);
        const auto system = build_block_system(cfg);
        CHECK(kernel_basis(system).size() == 1);

        const auto sol = primitive_positive_solution(cfg);
        // exact orthogonality
        for (const BigInt& r : verify_orthogonality(cfg, sol)) CHECK(r == 0);
        // positivity and primitivity
        CHECK(sol.x0 >= 1);
        for (const BigInt& x : sol.x) CHECK(x >= 1);
        CHECK(vector_gcd(full_vector(sol)) == 1);
    }
}

TEST_CASE("agreement with the closed forms up to positive scale") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> b_dist(2, 9), a_dist(1, 9);
    for (int trial = 0; trial < 120; ++trial) {
        {
            const long b = b_dist(rng), a = a_dist(rng);
            const auto sol = primitive_positive_solution(config({chain({b}, {a})}));
            const auto cf = closed_form_small_m({BigInt(b)}, {BigInt(a)});
            // closed form lists x0 first; solution vector is (x..., x0)
            CHECK(plumbcalc::testing::positively_proportional(full_vector(sol), {cf[1], cf[0]}));
        }
        {
            const long b1 = b_dist(rng), b2 = b_dist(rng), a1 = a_dist(rng), a2 = a_dist(rng);
            const auto sol = primitive_positive_solution(config({chain({b1, b2}, {a1, a2})}));
            const auto cf = closed_form_small_m({BigInt(b1), BigInt(b2)}, {BigInt(a1), BigInt(a2)});
            CHECK(plumbcalc::testing::positively_proportional(full_vector(sol),
                                                              {cf[1], cf[2], cf[0]}));
        }
    }
}

TEST_CASE("scaling every a by c rescales only x0") {
    std::mt19937_64 rng(99);
    plumbcalc::testing::ConfigFamily family;
    family.max_chains = 2;
    family.max_length = 4;
    std::uniform_int_distribution<long> c_dist(2, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto cfg = plumbcalc::testing::random_config(rng, family);
        const long c = c_dist(rng);
        PlumbingConfig scaled_cfg = cfg;
        for (auto& ch : scaled_cfg.chains)
            for (auto& a : ch.a) a *= c;

        const auto sol = primitive_positive_solution(cfg);
        const auto sol_scaled = primitive_positive_solution(scaled_cfg);

        // scaled solution is proportional to (x..., x0 / c) over the rationals
        std::vector<Rational> expected;
        for (const BigInt& x : sol.x) expected.emplace_back(x);
        expected.push_back(make_rational(sol.x0, BigInt(c)));
        std::vector<Rational> actual;
        for (const BigInt& x : sol_scaled.x) actual.emplace_back(x);
        actual.emplace_back(sol_scaled.x0);
        CHECK(plumbcalc::testing::positively_proportional_rational(actual, expected));
    }
}

TEST_CASE("first-row identity -x1*b1 + x2 = -a1*x0") {
    std::mt19937_64 rng(2025);
    plumbcalc::testing::ConfigFamily family;
    family.max_chains = 2;
    for (int trial = 0; trial < 60; ++trial) {
        const auto cfg = plumbcalc::testing::random_config(rng, family);
        const auto sol = primitive_positive_solution(cfg);
        for (std::size_t i = 0; i < cfg.chain_count(); ++i) {
            const std::size_t flat = cfg.flat_index(i, 0);
            const BigInt x2 =
                cfg.chains[i].length() > 1 ? sol.x[flat + 1] : BigInt(0);
            CHECK(-sol.x[flat] * cfg.chains[i].b[0] + x2 == -cfg.chains[i].a[0] * sol.x0);
        }
    }
}

TEST_SUITE_END();
