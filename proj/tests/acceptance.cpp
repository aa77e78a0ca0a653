// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Usage: plumbcalc_acceptance <path-to-cli> <sample-config>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "plumbcalc/cohomology.hpp"
#include "plumbcalc/intersection.hpp"
#include "plumbcalc/parse.hpp"
#include "plumbcalc/report.hpp"
#include "plumbcalc/solver.hpp"
#include "plumbcalc/validation.hpp"
#include "test_support.hpp"

using namespace plumbcalc;
using plumbcalc::testing::chain;
using plumbcalc::testing::config;

namespace {

int g_failures = 0;

void report_line(int criterion, bool pass, const std::string& label,
                 const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << label;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

std::vector<BigInt> full_vector(const DivisorSolution& sol) {
    std::vector<BigInt> v = sol.x;
    v.push_back(sol.x0);
    return v;
}

// -- criterion 1: agreement with the short-chain closed forms ---------------

bool closed_form_agreement(std::string& detail) {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long> b_dist(2, 9), a_dist(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const long b = b_dist(rng), a = a_dist(rng);
        const auto sol = primitive_positive_solution(config({chain({b}, {a})}));
        const auto cf = closed_form_small_m({BigInt(b)}, {BigInt(a)});
        if (!plumbcalc::testing::positively_proportional(full_vector(sol), {cf[1], cf[0]})) {
            detail = "m=1 mismatch at b=" + std::to_string(b) + ", a=" + std::to_string(a);
            return false;
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        const long b1 = b_dist(rng), b2 = b_dist(rng);
        const long a1 = a_dist(rng), a2 = a_dist(rng);
        const auto sol = primitive_positive_solution(config({chain({b1, b2}, {a1, a2})}));
        const auto cf = closed_form_small_m({BigInt(b1), BigInt(b2)}, {BigInt(a1), BigInt(a2)});
        if (!plumbcalc::testing::positively_proportional(full_vector(sol),
                                                         {cf[1], cf[2], cf[0]})) {
            detail = "m=2 mismatch at b=(" + std::to_string(b1) + "," + std::to_string(b2) +
                     "), a=(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
            return false;
        }
    }
    return true;
}

// -- criterion 2: exact orthogonality, positivity, primitivity, uniqueness --

bool orthogonality_and_uniqueness(std::string& detail) {
    std::mt19937_64 rng(202);
    plumbcalc::testing::ConfigFamily family;  // k <= 3, m <= 6, b in [2,9], a in [1,9]
    for (int trial = 0; trial < 200; ++trial) {
        const auto cfg = plumbcalc::testing::random_config(rng, family);
        if (kernel_basis(build_block_system(cfg)).size() != 1) {
            detail = "kernel dimension != 1 at trial " + std::to_string(trial);
            return false;
        }
        const auto sol = primitive_positive_solution(cfg);
        for (const BigInt& r : verify_orthogonality(cfg, sol))
            if (r != 0) {
                detail = "nonzero residual at trial " + std::to_string(trial);
                return false;
            }
        if (sol.x0 < 1) return false;
        for (const BigInt& x : sol.x)
            if (x < 1) {
                detail = "non-positive entry at trial " + std::to_string(trial);
                return false;
            }
        if (vector_gcd(full_vector(sol)) != 1) {
            detail = "non-primitive solution at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

// -- criterion 3: negative definiteness and Artin rationality ----------------

bool definiteness_and_rationality(std::string& detail) {
    std::mt19937_64 rng(303);
    plumbcalc::testing::ConfigFamily family;
    for (int trial = 0; trial < 200; ++trial) {
        const auto cfg = plumbcalc::testing::random_config(rng, family);
        if (!is_negative_definite(intersection_matrix(cfg))) {
            detail = "form not negative definite at trial " + std::to_string(trial);
            return false;
        }
        for (std::size_t i = 0; i < cfg.chain_count(); ++i) {
            const Cycle z = fundamental_cycle(cfg, i);
            if (cycle_genus(cfg, z) != 0) {
                detail = "fundamental cycle genus != 0 at trial " + std::to_string(trial);
                return false;
            }
        }
    }
    return true;
}

// -- criterion 4: the hand-computed engine fixture ---------------------------

bool engine_fixture(std::string& detail) {
    const auto cfg = config({chain({2}, {1})});
    Cycle two_c1;
    two_c1.mult = {BigInt(2)};
    const auto ledger = peel_ledger(cfg, two_c1, two_c1);
    const bool ok = ledger.h0_total == DimInterval{1, 1} &&
                    ledger.h1_total == DimInterval{9, 9} && ledger.euler_total == -8 &&
                    ledger.h0_total.lo - ledger.h1_total.lo == ledger.euler_total;
    if (!ok)
        detail = "got h0=[" + to_string(ledger.h0_total.lo) + "," + to_string(ledger.h0_total.hi) +
                 "], h1=[" + to_string(ledger.h1_total.lo) + "," + to_string(ledger.h1_total.hi) +
                 "], euler=" + to_string(ledger.euler_total);
    return ok;
}

// -- criterion 5: Euler additivity and order independence --------------------

bool euler_order_independence(std::string& detail) {
    const std::vector<PlumbingConfig> configs = {
        config({chain({2}, {1})}),
        config({chain({3}, {2})}),
        config({chain({2, 2}, {1, 1})}),
        config({chain({3, 2}, {1, 2})}),
        config({chain({4, 3}, {2, 1})}),
    };
    for (const auto& cfg : configs) {
        const std::size_t size = cfg.curve_count();
        const auto sol = primitive_positive_solution(cfg);
        const Cycle e = divisor_part(cfg, sol);

        std::vector<Cycle> targets;
        std::vector<long> mult(size, 0);
        auto rec = [&](auto&& self, std::size_t idx, long used) -> void {
            if (idx == size) {
                if (used > 0) {
                    Cycle c;
                    for (long m : mult) c.mult.emplace_back(m);
                    targets.push_back(std::move(c));
                }
                return;
            }
            for (long v = 0; v + used <= 5; ++v) {
                mult[idx] = v;
                self(self, idx + 1, used + v);
            }
            mult[idx] = 0;
        };
        rec(rec, 0, 0);

        for (const Cycle& target : targets) {
            for (const Cycle& twist : {zero_cycle(cfg), e, scaled(e, BigInt(2))}) {
                PeelOptions canonical_options;
                canonical_options.record_steps = false;
                const auto canonical = peel_ledger(cfg, target, twist, canonical_options);
                const bool canonical_exact =
                    canonical.h0_total.is_point() && canonical.h1_total.is_point();
                if (!(canonical.h0_total.lo - canonical.h1_total.hi <= canonical.euler_total &&
                      canonical.euler_total <= canonical.h0_total.hi - canonical.h1_total.lo)) {
                    detail = "euler outside interval band";
                    return false;
                }

                std::vector<std::size_t> order;
                for (std::size_t flat = 0; flat < size; ++flat)
                    for (BigInt c = 0; c < target.mult[flat]; ++c) order.push_back(flat);
                std::sort(order.begin(), order.end());
                do {
                    PeelOptions options;
                    options.explicit_order = order;
                    options.record_steps = false;
                    const auto ledger = peel_ledger(cfg, target, twist, options);
                    if (ledger.euler_total != canonical.euler_total) {
                        detail = "euler depends on the peeling order";
                        return false;
                    }
                    if (canonical_exact && (!ledger.h0_total.contains(canonical.h0_total.lo) ||
                                            !ledger.h1_total.contains(canonical.h1_total.lo))) {
                        detail = "order interval misses the canonical point value";
                        return false;
                    }
                } while (std::next_permutation(order.begin(), order.end()));
            }
        }
    }
    return true;
}

// -- criteria 6 and 7: vanishing thresholds and quadratic growth -------------

std::vector<PlumbingConfig> cohomology_family() {
    std::mt19937_64 rng(606);
    plumbcalc::testing::ConfigFamily family;
    family.max_chains = 2;
    family.max_length = 4;
    family.b_max = 5;
    family.a_max = 3;
    std::vector<PlumbingConfig> configs;
    for (int trial = 0; trial < 50; ++trial)
        configs.push_back(plumbcalc::testing::random_config(rng, family));
    return configs;
}

bool all_vanish(const PlumbingConfig& cfg, const DivisorSolution& sol, long long n) {
    const auto component = check_component_h0_vanishing(cfg, sol, n);
    if (!std::all_of(component.begin(), component.end(), [](bool v) { return v; })) return false;
    return check_h0_reduced_E_vanishing(cfg, sol, n);
}

bool vanishing_thresholds(std::string& detail) {
    const auto configs = cohomology_family();
    for (std::size_t idx = 0; idx < configs.size(); ++idx) {
        const auto& cfg = configs[idx];
        const auto sol = primitive_positive_solution(cfg);
        long long first = -1;
        for (long long n = 1; n <= 50; ++n) {
            if (all_vanish(cfg, sol, n)) {
                first = n;
                break;
            }
        }
        if (first < 0) {
            detail = "no vanishing threshold <= 50 for config " + std::to_string(idx);
            return false;
        }
        for (long long n = first; n <= 60; ++n) {
            if (!all_vanish(cfg, sol, n)) {
                detail = "vanishing does not persist at n=" + std::to_string(n) + " for config " +
                         std::to_string(idx);
                return false;
            }
        }
    }
    return true;
}

bool quadratic_growth(std::string& detail) {
    const auto configs = cohomology_family();
    for (std::size_t idx = 0; idx < configs.size(); ++idx) {
        const auto& cfg = configs[idx];
        const auto sol = primitive_positive_solution(cfg);
        const auto growth = growth_analysis(cfg, sol, NRange{2, 12});
        if (!(growth.quadratic_leading_coefficient > 0)) {
            detail = "fitted leading coefficient <= 0 for config " + std::to_string(idx);
            return false;
        }
        if (!growth.threshold_n.has_value()) {
            detail = "no positivity threshold in range for config " + std::to_string(idx);
            return false;
        }
    }
    return true;
}

// -- criterion 8: discrepancy table carries both columns exactly -------------

bool discrepancy_transparency(std::string& detail) {
    const std::vector<std::pair<long, long>> fixtures = {{2, 1}, {3, 1}};
    for (const auto& [b, a] : fixtures) {
        const auto cfg = config({chain({b}, {a})});
        const auto sol = primitive_positive_solution(cfg);
        const auto rows = discrepancy_report(cfg, sol, NRange{1, 6});
        if (rows.size() != 6) {
            detail = "expected 6 rows for b=" + std::to_string(b);
            return false;
        }
        for (const auto& row : rows) {
            // engine column must equal a fresh ledger evaluation
            const Cycle ne = scaled(divisor_part(cfg, sol), big_of(row.n));
            PeelOptions options;
            options.record_steps = false;
            const auto ledger = peel_ledger(cfg, ne, ne, options);
            if (row.engine_h1 != ledger.h1_total) {
                detail = "engine column mismatch at n=" + std::to_string(row.n);
                return false;
            }
            // closed-form column must equal the independently accumulated sum
            BigInt expected = 0;
            const BigInt nx = big_of(row.n) * sol.x[0];
            for (BigInt l = 0; l < nx; ++l)
                expected += 2 * nx - 2 * l * BigInt(b) + BigInt(b);
            if (row.closed_form_sum != expected) {
                detail = "closed-form column mismatch at n=" + std::to_string(row.n);
                return false;
            }
            if (row.difference != row.engine_h1.lo - row.closed_form_sum) {
                detail = "difference column mismatch at n=" + std::to_string(row.n);
                return false;
            }
        }
    }
    return true;
}

// -- criterion 9: CLI determinism and json round-trip ------------------------

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool cli_contract(const std::string& cli, const std::string& sample_config, std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::current_path() / "acceptance_tmp";
    fs::remove_all(dir);
    fs::create_directories(dir);

    struct Command {
        std::string name;
        std::string args;
    };
    const std::vector<Command> commands = {
        {"validate", "validate " + sample_config},
        {"solve", "solve " + sample_config},
        {"cohomology", "cohomology " + sample_config + " --n 3"},
        {"sweep", "sweep " + sample_config},
        {"report", "report " + sample_config + " --format json"},
    };

    for (const Command& cmd : commands) {
        std::vector<std::string> outputs;
        for (int run = 0; run < 2; ++run) {
            const fs::path out = dir / (cmd.name + "_" + std::to_string(run) + ".txt");
            const std::string shell =
                cli + " " + cmd.args + " > " + out.string() + " 2>/dev/null";
            const int status = std::system(shell.c_str());
            if (status != 0) {
                detail = cmd.name + " exited with status " + std::to_string(status);
                return false;
            }
            outputs.push_back(slurp(out));
            if (outputs.back().empty()) {
                detail = cmd.name + " produced no output";
                return false;
            }
        }
        if (outputs[0] != outputs[1]) {
            detail = cmd.name + " output differs between consecutive runs";
            return false;
        }
    }

    // csv emission is deterministic too
    for (int run = 0; run < 2; ++run) {
        const std::string prefix = (dir / ("csv" + std::to_string(run))).string();
        const std::string shell = cli + " report " + sample_config + " --format csv --out " +
                                  prefix + " > /dev/null 2>&1";
        if (std::system(shell.c_str()) != 0) {
            detail = "csv report run failed";
            return false;
        }
    }
    for (const char* section : {"validation", "solution", "vanishing", "growth", "discrepancy"}) {
        const std::string a = slurp(dir / (std::string("csv0_") + section + ".csv"));
        const std::string b = slurp(dir / (std::string("csv1_") + section + ".csv"));
        if (a.empty() || a != b) {
            detail = std::string("csv section ") + section + " not byte-stable";
            return false;
        }
    }

    // the emitted json parses back to the in-process report and re-emits
    // byte-identically
    const std::string json_text = slurp(dir / "report_0.txt");
    const RunReport parsed = report_from_json(json_text);
    const std::string text = slurp(sample_config);
    const ConfigFile cfg_file = parse_config(text);
    const NRange range = cfg_file.sweep ? *cfg_file.sweep : NRange{2, 10};
    const RunReport rebuilt = build_run_report(cfg_file.config, text, range);
    if (!(parsed == rebuilt)) {
        detail = "parsed report differs from the in-process report";
        return false;
    }
    if (report_to_json(parsed) != json_text) {
        detail = "re-emitted json is not byte-identical";
        return false;
    }
    return true;
}

template <typename F, typename... Args>
void run_criterion(int number, const std::string& label, F&& fn, Args&&... args) {
    std::string detail;
    bool pass = false;
    try {
        pass = fn(std::forward<Args>(args)..., detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report_line(number, pass, label, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: plumbcalc_acceptance <path-to-cli> <sample-config>" << std::endl;
        return 2;
    }
    const std::string cli = argv[1];
    const std::string sample_config = argv[2];

    run_criterion(1, "closed-form agreement (200 m=1 + 200 m=2 random configs)",
                  closed_form_agreement);
    run_criterion(2, "orthogonality, positivity, primitivity, kernel uniqueness (200 configs)",
                  orthogonality_and_uniqueness);
    run_criterion(3, "negative definiteness and Artin rationality (200 configs)",
                  definiteness_and_rationality);
    run_criterion(4, "engine fixture b=[2] a=[1] n=2: h0=[1,1], h1=[9,9], euler=-8",
                  engine_fixture);
    run_criterion(5, "euler additivity and order independence (multiplicity <= 5, exhaustive)",
                  euler_order_independence);
    run_criterion(6, "vanishing thresholds exist by n=50 and persist through n=60 (50 configs)",
                  vanishing_thresholds);
    run_criterion(7, "quadratic growth of h1 lower bounds over n in [2,12] (50 configs)",
                  quadratic_growth);
    run_criterion(8, "discrepancy table carries engine and closed-form columns exactly",
                  discrepancy_transparency);
    run_criterion(9, "CLI determinism and json round-trip on the shipped config",
                  [&](std::string& detail) { return cli_contract(cli, sample_config, detail); });

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
