// plumbcalc: exact divisor orthogonalization and cohomology bookkeeping for
// plumbed chains of rational curves.
//
//   plumbcalc <validate|solve|cohomology|sweep|report> <config-file>
//             [--n N] [--n-range LO:HI] [--format json|csv] [--out PATH]
//             [--peel-order canonical|reverse]
//
// Exit codes: 0 success, 2 input error, 3 internal invariant violation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "plumbcalc/cohomology.hpp"
#include "plumbcalc/errors.hpp"
#include "plumbcalc/parse.hpp"
#include "plumbcalc/report.hpp"
#include "plumbcalc/solver.hpp"
#include "plumbcalc/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw plumbcalc::input_error("cannot open config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

plumbcalc::PeelOrder parse_order(const std::string& name) {
    if (name == "canonical") return plumbcalc::PeelOrder::Canonical;
    if (name == "reverse") return plumbcalc::PeelOrder::Reverse;
    throw plumbcalc::input_error("unknown peel order: " + name);
}

plumbcalc::NRange parse_n_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw plumbcalc::input_error("--n-range expects LO:HI, got: " + text);
    try {
        const long long lo = std::stoll(text.substr(0, colon));
        const long long hi = std::stoll(text.substr(colon + 1));
        if (lo < 1 || hi < lo)
            throw plumbcalc::input_error("--n-range must satisfy 1 <= LO <= HI");
        return plumbcalc::NRange{lo, hi};
    } catch (const std::invalid_argument&) {
        throw plumbcalc::input_error("--n-range expects integers LO:HI, got: " + text);
    } catch (const std::out_of_range&) {
        throw plumbcalc::input_error("--n-range values out of range: " + text);
    }
}

std::vector<std::pair<std::size_t, std::size_t>> curve_labels(
    const plumbcalc::PlumbingConfig& config) {
    std::vector<std::pair<std::size_t, std::size_t>> labels;
    for (std::size_t i = 0; i < config.chain_count(); ++i)
        for (std::size_t j = 0; j < config.chains[i].length(); ++j)
            labels.emplace_back(i + 1, j + 1);
    return labels;
}

void print_validation(const plumbcalc::PlumbingConfig& config,
                      const plumbcalc::ValidationReport& report) {
    using plumbcalc::to_string;
    std::cout << "chains: " << config.chain_count() << ", curves: " << config.curve_count()
              << "\n";
    std::cout << "negative definite: " << (report.negative_definite ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < report.chains.size(); ++i) {
        const auto& cv = report.chains[i];
        const auto& chain = config.chains[i];
        std::cout << "chain " << (i + 1) << ": b=[";
        for (std::size_t j = 0; j < chain.length(); ++j)
            std::cout << (j ? "," : "") << to_string(chain.b[j]);
        std::cout << "] a=[";
        for (std::size_t j = 0; j < chain.length(); ++j)
            std::cout << (j ? "," : "") << to_string(chain.a[j]);
        std::cout << "]\n";
        std::cout << "  hirzebruch-jung: " << to_string(cv.hj_n) << "/" << to_string(cv.hj_q)
                  << "\n";
        std::cout << "  fundamental cycle: [";
        for (std::size_t j = 0; j < cv.fundamental_cycle.size(); ++j)
            std::cout << (j ? "," : "") << to_string(cv.fundamental_cycle[j]);
        std::cout << "]\n";
        std::cout << "  arithmetic genus: " << to_string(cv.genus) << "\n";
        std::cout << "  rational: " << (cv.rational ? "yes" : "no") << "\n";
    }
}

void print_solution(const plumbcalc::PlumbingConfig& config,
                    const plumbcalc::DivisorSolution& sol) {
    using plumbcalc::to_string;
    const auto labels = curve_labels(config);
    const auto residuals = plumbcalc::verify_orthogonality(config, sol);
    std::cout << "x0 = " << to_string(sol.x0) << "\n";
    for (std::size_t f = 0; f < sol.x.size(); ++f)
        std::cout << "x[" << labels[f].first << "][" << labels[f].second
                  << "] = " << to_string(sol.x[f]) << "\n";
    for (std::size_t f = 0; f < residuals.size(); ++f)
        std::cout << "L.C[" << labels[f].first << "][" << labels[f].second
                  << "] = " << to_string(residuals[f]) << "\n";
}

void print_ledger(const plumbcalc::PlumbingConfig& config, const plumbcalc::DivisorSolution& sol,
                  long long n, plumbcalc::PeelOrder order) {
    using plumbcalc::to_string;
    const plumbcalc::Cycle e = plumbcalc::divisor_part(config, sol);
    const plumbcalc::Cycle ne = plumbcalc::scaled(e, plumbcalc::big_of(n));
    plumbcalc::PeelOptions options;
    options.order = order;
    const auto ledger = plumbcalc::peel_ledger(config, ne, ne, options);

    std::cout << "target nE, twist nE, n = " << n << "\n";
    std::cout << "step  component  d_T  d_N  h0  h1  exact\n";
    for (std::size_t s = 0; s < ledger.steps.size(); ++s) {
        const auto& step = ledger.steps[s];
        std::cout << s << "  C[" << (step.component.chain + 1) << "][" << (step.component.pos + 1)
                  << "]  " << to_string(step.d_T) << "  " << to_string(step.d_N) << "  "
                  << to_string(step.h0_step) << "  " << to_string(step.h1_step) << "  "
                  << (step.exact ? "yes" : "no") << "\n";
    }
    std::cout << "h0 = [" << to_string(ledger.h0_total.lo) << "," << to_string(ledger.h0_total.hi)
              << "]\n";
    std::cout << "h1 = [" << to_string(ledger.h1_total.lo) << "," << to_string(ledger.h1_total.hi)
              << "]\n";
    std::cout << "euler = " << to_string(ledger.euler_total) << "\n";

    const auto labels = curve_labels(config);
    const auto component = plumbcalc::check_component_h0_vanishing(config, sol, n, order);
    for (std::size_t f = 0; f < component.size(); ++f)
        std::cout << "h0 vanishing on x*C[" << labels[f].first << "][" << labels[f].second
                  << "]: " << (component[f] ? "true" : "false") << "\n";
    std::cout << "h0 vanishing on E: "
              << (plumbcalc::check_h0_reduced_E_vanishing(config, sol, n, order) ? "true" : "false")
              << "\n";
}

void print_growth(const plumbcalc::GrowthReport& growth) {
    using plumbcalc::to_string;
    std::cout << "n  h1_lo  h1_hi  second_diff\n";
    for (std::size_t i = 0; i < growth.n_values.size(); ++i) {
        std::cout << growth.n_values[i] << "  " << to_string(growth.h1_lo[i]) << "  "
                  << to_string(growth.h1_hi[i]) << "  ";
        if (i < growth.second_differences.size())
            std::cout << to_string(growth.second_differences[i]);
        std::cout << "\n";
    }
    std::cout << "leading coefficient = " << to_string(growth.quadratic_leading_coefficient)
              << " (" << growth.quadratic_leading_coefficient_float << ")\n";
    if (growth.threshold_n)
        std::cout << "second differences positive from n = " << *growth.threshold_n << "\n";
    else
        std::cout << "second differences positive from n = (absent)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact divisor and cohomology calculator for plumbed rational curve chains"};
    app.require_subcommand(1);

    std::string config_path;
    std::string order_name = "canonical";
    std::string format = "json";
    std::string out_path;
    long long n_value = 0;
    std::string n_range_text;

    auto add_common = [&](CLI::App* sub, bool with_range) {
        sub->add_option("config", config_path, "path to a plumbing config file")->required();
        sub->add_option("--peel-order", order_name, "canonical|reverse")
            ->check(CLI::IsMember({"canonical", "reverse"}));
        if (with_range) sub->add_option("--n-range", n_range_text, "inclusive range LO:HI");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the standing assumptions");
    add_common(validate, false);
    CLI::App* solve = app.add_subcommand("solve", "compute the primitive positive solution");
    add_common(solve, false);
    CLI::App* cohomology =
        app.add_subcommand("cohomology", "peel the cycle nE and report dimension intervals");
    add_common(cohomology, false);
    cohomology->add_option("--n", n_value, "twist level n >= 1")->required();
    CLI::App* sweep = app.add_subcommand("sweep", "growth analysis over a range of n");
    add_common(sweep, true);
    CLI::App* report = app.add_subcommand("report", "emit the full machine-readable report");
    add_common(report, true);
    report->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--out", out_path, "output file (json) or file prefix (csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        const std::string text = read_file(config_path);
        const plumbcalc::ConfigFile parsed = plumbcalc::parse_config(text);
        const plumbcalc::PeelOrder order = parse_order(order_name);

        auto resolve_range = [&](plumbcalc::NRange fallback) {
            if (!n_range_text.empty()) return parse_n_range(n_range_text);
            if (parsed.sweep) return *parsed.sweep;
            return fallback;
        };

        if (*validate) {
            const auto vreport = plumbcalc::validate_config(parsed.config);
            print_validation(parsed.config, vreport);
            if (!vreport.negative_definite || !vreport.all_rational()) return kExitInputError;
        } else if (*solve) {
            plumbcalc::validate_config(parsed.config);
            const auto sol = plumbcalc::primitive_positive_solution(parsed.config);
            print_solution(parsed.config, sol);
        } else if (*cohomology) {
            if (n_value < 1) throw plumbcalc::input_error("--n must be >= 1");
            plumbcalc::validate_config(parsed.config);
            const auto sol = plumbcalc::primitive_positive_solution(parsed.config);
            print_ledger(parsed.config, sol, n_value, order);
        } else if (*sweep) {
            plumbcalc::validate_config(parsed.config);
            const auto sol = plumbcalc::primitive_positive_solution(parsed.config);
            const auto range = resolve_range(plumbcalc::NRange{2, 10});
            print_growth(plumbcalc::growth_analysis(parsed.config, sol, range, order));
        } else if (*report) {
            const auto range = resolve_range(plumbcalc::NRange{2, 10});
            const auto run = plumbcalc::build_run_report(parsed.config, text, range, order);
            if (format == "json") {
                const std::string body = plumbcalc::report_to_json(run);
                if (out_path.empty()) {
                    std::cout << body;
                } else {
                    std::ofstream out(out_path, std::ios::binary);
                    if (!out) throw plumbcalc::input_error("cannot write " + out_path);
                    out << body;
                }
            } else {
                if (out_path.empty())
                    throw plumbcalc::input_error("--format csv requires --out PREFIX");
                for (const std::string& path : plumbcalc::report_to_csv(run, out_path))
                    std::cout << "wrote " << path << "\n";
            }
        }
        return kExitOk;
    } catch (const plumbcalc::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
