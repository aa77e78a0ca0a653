#include "plumbcalc/report.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "plumbcalc/errors.hpp"

namespace plumbcalc {

namespace {

using Json = nlohmann::ordered_json;

Json big_list(const std::vector<BigInt>& values) {
    Json arr = Json::array();
    for (const BigInt& v : values) arr.push_back(to_string(v));
    return arr;
}

std::vector<BigInt> big_list_from(const Json& arr) {
    std::vector<BigInt> out;
    for (const auto& v : arr) out.push_back(BigInt(v.get<std::string>()));
    return out;
}

std::string rational_string(const Rational& r) { return to_string(r); }

Rational rational_from(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

Json interval_json(const DimInterval& iv) {
    return Json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}};
}

DimInterval interval_from(const Json& j) {
    return DimInterval{BigInt(j.at("lo").get<std::string>()),
                       BigInt(j.at("hi").get<std::string>())};
}

Json step_json(const PeelStep& step) {
    Json j;
    j["chain"] = step.component.chain + 1;
    j["curve"] = step.component.pos + 1;
    j["remaining"] = big_list(step.remaining.mult);
    j["twist"] = big_list(step.twist.mult);
    j["d_t"] = to_string(step.d_T);
    j["d_n"] = to_string(step.d_N);
    j["h0"] = to_string(step.h0_step);
    j["h1"] = to_string(step.h1_step);
    j["exact"] = step.exact;
    return j;
}

PeelStep step_from(const Json& j) {
    PeelStep step;
    step.component.chain = j.at("chain").get<std::size_t>() - 1;
    step.component.pos = j.at("curve").get<std::size_t>() - 1;
    step.remaining.mult = big_list_from(j.at("remaining"));
    step.twist.mult = big_list_from(j.at("twist"));
    step.d_T = BigInt(j.at("d_t").get<std::string>());
    step.d_N = BigInt(j.at("d_n").get<std::string>());
    step.h0_step = BigInt(j.at("h0").get<std::string>());
    step.h1_step = BigInt(j.at("h1").get<std::string>());
    step.exact = j.at("exact").get<bool>();
    return step;
}

const char* order_name(PeelOrder order) {
    return order == PeelOrder::Canonical ? "canonical" : "reverse";
}

}  // namespace

RunReport build_run_report(const PlumbingConfig& config, const std::string& input_text,
                           NRange n_range, PeelOrder order) {
    RunReport report;
    report.metadata.tool = kToolName;
    report.metadata.version = kToolVersion;
    report.metadata.input_hash = "fnv1a64:" + fnv1a64_hex(input_text);
    report.metadata.peel_order = order_name(order);
    report.config = config;
    report.validation = validate_config(config);

    const DivisorSolution sol = primitive_positive_solution(config);
    report.solution.x0 = sol.x0;
    report.solution.x = sol.x;
    report.solution.orthogonality = verify_orthogonality(config, sol);

    report.n_range = n_range;
    const Cycle e = divisor_part(config, sol);
    PeelOptions options;
    options.order = order;
    for (long long n = n_range.lo; n <= n_range.hi; ++n) {
        const Cycle ne = scaled(e, big_of(n));
        const CohomologyLedger ledger = peel_ledger(config, ne, ne, options);
        LedgerSummary summary;
        summary.n = n;
        summary.h0 = ledger.h0_total;
        summary.h1 = ledger.h1_total;
        summary.euler = ledger.euler_total;
        summary.steps = ledger.steps;
        summary.component_vanishing = check_component_h0_vanishing(config, sol, n, order);
        summary.reduced_e_vanishing = check_h0_reduced_E_vanishing(config, sol, n, order);
        report.per_n.push_back(std::move(summary));
    }

    report.growth = growth_analysis(config, sol, n_range, order);
    report.discrepancy = discrepancy_report(config, sol, n_range);
    return report;
}

std::string report_to_json(const RunReport& report) {
    Json j;
    j["metadata"] = Json{{"tool", report.metadata.tool},
                         {"version", report.metadata.version},
                         {"input_hash", report.metadata.input_hash},
                         {"peel_order", report.metadata.peel_order}};

    Json chains = Json::array();
    for (const ChainSpec& chain : report.config.chains)
        chains.push_back(Json{{"b", big_list(chain.b)}, {"a", big_list(chain.a)}});
    j["config"] = Json{{"chains", chains}};

    Json vchains = Json::array();
    for (const ChainValidation& cv : report.validation.chains) {
        vchains.push_back(Json{{"hj_n", to_string(cv.hj_n)},
                               {"hj_q", to_string(cv.hj_q)},
                               {"fundamental_cycle", big_list(cv.fundamental_cycle)},
                               {"genus", to_string(cv.genus)},
                               {"rational", cv.rational}});
    }
    j["validation"] = Json{{"negative_definite", report.validation.negative_definite},
                           {"chains", vchains}};

    j["solution"] = Json{{"x0", to_string(report.solution.x0)},
                         {"x", big_list(report.solution.x)},
                         {"orthogonality", big_list(report.solution.orthogonality)}};

    j["n_range"] = Json{{"lo", report.n_range.lo}, {"hi", report.n_range.hi}};

    Json per_n = Json::array();
    for (const LedgerSummary& summary : report.per_n) {
        Json entry;
        entry["n"] = summary.n;
        entry["h0"] = interval_json(summary.h0);
        entry["h1"] = interval_json(summary.h1);
        entry["euler"] = to_string(summary.euler);
        entry["component_vanishing"] = summary.component_vanishing;
        entry["reduced_e_vanishing"] = summary.reduced_e_vanishing;
        Json steps = Json::array();
        for (const PeelStep& step : summary.steps) steps.push_back(step_json(step));
        entry["steps"] = steps;
        per_n.push_back(std::move(entry));
    }
    j["per_n"] = per_n;

    Json growth;
    growth["n_values"] = report.growth.n_values;
    growth["h1_lo"] = big_list(report.growth.h1_lo);
    growth["h1_hi"] = big_list(report.growth.h1_hi);
    growth["second_differences"] = big_list(report.growth.second_differences);
    growth["leading_coefficient"] = rational_string(report.growth.quadratic_leading_coefficient);
    growth["leading_coefficient_float"] = report.growth.quadratic_leading_coefficient_float;
    if (report.growth.threshold_n)
        growth["threshold_n"] = *report.growth.threshold_n;
    else
        growth["threshold_n"] = nullptr;
    j["growth"] = growth;

    Json discrepancy = Json::array();
    for (const DiscrepancyRow& row : report.discrepancy) {
        discrepancy.push_back(Json{{"n", row.n},
                                   {"engine_h1_lo", to_string(row.engine_h1.lo)},
                                   {"engine_h1_hi", to_string(row.engine_h1.hi)},
                                   {"closed_form_sum", to_string(row.closed_form_sum)},
                                   {"difference", to_string(row.difference)},
                                   {"disagreeing_steps", row.disagreeing_steps}});
    }
    j["discrepancy"] = discrepancy;

    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("report JSON parse failure: ") + e.what());
    }
    try {
        RunReport report;
        const Json& meta = j.at("metadata");
        report.metadata.tool = meta.at("tool").get<std::string>();
        report.metadata.version = meta.at("version").get<std::string>();
        report.metadata.input_hash = meta.at("input_hash").get<std::string>();
        report.metadata.peel_order = meta.at("peel_order").get<std::string>();

        for (const auto& chain : j.at("config").at("chains"))
            report.config.chains.push_back(
                ChainSpec{big_list_from(chain.at("b")), big_list_from(chain.at("a"))});

        const Json& validation = j.at("validation");
        report.validation.negative_definite = validation.at("negative_definite").get<bool>();
        for (const auto& cv : validation.at("chains")) {
            ChainValidation parsed;
            parsed.hj_n = BigInt(cv.at("hj_n").get<std::string>());
            parsed.hj_q = BigInt(cv.at("hj_q").get<std::string>());
            parsed.fundamental_cycle = big_list_from(cv.at("fundamental_cycle"));
            parsed.genus = BigInt(cv.at("genus").get<std::string>());
            parsed.rational = cv.at("rational").get<bool>();
            report.validation.chains.push_back(std::move(parsed));
        }

        const Json& solution = j.at("solution");
        report.solution.x0 = BigInt(solution.at("x0").get<std::string>());
        report.solution.x = big_list_from(solution.at("x"));
        report.solution.orthogonality = big_list_from(solution.at("orthogonality"));

        report.n_range = NRange{j.at("n_range").at("lo").get<long long>(),
                                j.at("n_range").at("hi").get<long long>()};

        for (const auto& entry : j.at("per_n")) {
            LedgerSummary summary;
            summary.n = entry.at("n").get<long long>();
            summary.h0 = interval_from(entry.at("h0"));
            summary.h1 = interval_from(entry.at("h1"));
            summary.euler = BigInt(entry.at("euler").get<std::string>());
            summary.component_vanishing = entry.at("component_vanishing").get<std::vector<bool>>();
            summary.reduced_e_vanishing = entry.at("reduced_e_vanishing").get<bool>();
            for (const auto& step : entry.at("steps")) summary.steps.push_back(step_from(step));
            report.per_n.push_back(std::move(summary));
        }

        const Json& growth = j.at("growth");
        report.growth.n_values = growth.at("n_values").get<std::vector<long long>>();
        report.growth.h1_lo = big_list_from(growth.at("h1_lo"));
        report.growth.h1_hi = big_list_from(growth.at("h1_hi"));
        report.growth.second_differences = big_list_from(growth.at("second_differences"));
        report.growth.quadratic_leading_coefficient =
            rational_from(growth.at("leading_coefficient").get<std::string>());
        report.growth.quadratic_leading_coefficient_float =
            growth.at("leading_coefficient_float").get<double>();
        if (!growth.at("threshold_n").is_null())
            report.growth.threshold_n = growth.at("threshold_n").get<long long>();

        for (const auto& row : j.at("discrepancy")) {
            DiscrepancyRow parsed;
            parsed.n = row.at("n").get<long long>();
            parsed.engine_h1 = DimInterval{BigInt(row.at("engine_h1_lo").get<std::string>()),
                                           BigInt(row.at("engine_h1_hi").get<std::string>())};
            parsed.closed_form_sum = BigInt(row.at("closed_form_sum").get<std::string>());
            parsed.difference = BigInt(row.at("difference").get<std::string>());
            parsed.disagreeing_steps = row.at("disagreeing_steps").get<std::vector<long long>>();
            report.discrepancy.push_back(std::move(parsed));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("report JSON has unexpected shape: ") + e.what());
    }
}

namespace {

std::string joined(const std::vector<BigInt>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ';';
        out += to_string(values[i]);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> curve_labels(const PlumbingConfig& config) {
    std::vector<std::pair<std::size_t, std::size_t>> labels;
    for (std::size_t i = 0; i < config.chain_count(); ++i)
        for (std::size_t j = 0; j < config.chains[i].length(); ++j) labels.emplace_back(i + 1, j + 1);
    return labels;
}

void write_file(const std::string& path, const std::string& contents,
                std::vector<std::string>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path);
    out << contents;
    written.push_back(path);
}

}  // namespace

std::vector<std::string> report_to_csv(const RunReport& report, const std::string& prefix) {
    std::vector<std::string> written;
    const auto labels = curve_labels(report.config);

    {
        std::ostringstream os;
        os << "chain,m,b,a,hj_n,hj_q,fundamental_cycle,genus,rational\n";
        for (std::size_t i = 0; i < report.validation.chains.size(); ++i) {
            const ChainValidation& cv = report.validation.chains[i];
            const ChainSpec& chain = report.config.chains[i];
            os << (i + 1) << ',' << chain.length() << ',' << joined(chain.b) << ','
               << joined(chain.a) << ',' << to_string(cv.hj_n) << ',' << to_string(cv.hj_q) << ','
               << joined(cv.fundamental_cycle) << ',' << to_string(cv.genus) << ','
               << (cv.rational ? "true" : "false") << '\n';
        }
        write_file(prefix + "_validation.csv", os.str(), written);
    }
    {
        std::ostringstream os;
        os << "name,value\n";
        os << "x0," << to_string(report.solution.x0) << '\n';
        for (std::size_t f = 0; f < report.solution.x.size(); ++f)
            os << "x[" << labels[f].first << "][" << labels[f].second << "],"
               << to_string(report.solution.x[f]) << '\n';
        for (std::size_t f = 0; f < report.solution.orthogonality.size(); ++f)
            os << "LC[" << labels[f].first << "][" << labels[f].second << "],"
               << to_string(report.solution.orthogonality[f]) << '\n';
        write_file(prefix + "_solution.csv", os.str(), written);
    }
    {
        std::ostringstream os;
        os << "n,kind,chain,curve,vanishes\n";
        for (const LedgerSummary& summary : report.per_n) {
            for (std::size_t f = 0; f < summary.component_vanishing.size(); ++f)
                os << summary.n << ",component," << labels[f].first << ',' << labels[f].second
                   << ',' << (summary.component_vanishing[f] ? "true" : "false") << '\n';
            os << summary.n << ",reduced_E,,,"
               << (summary.reduced_e_vanishing ? "true" : "false") << '\n';
        }
        write_file(prefix + "_vanishing.csv", os.str(), written);
    }
    {
        std::ostringstream os;
        os << "n,h1_lo,h1_hi,second_diff\n";
        for (std::size_t i = 0; i < report.growth.n_values.size(); ++i) {
            os << report.growth.n_values[i] << ',' << to_string(report.growth.h1_lo[i]) << ','
               << to_string(report.growth.h1_hi[i]) << ',';
            if (i < report.growth.second_differences.size())
                os << to_string(report.growth.second_differences[i]);
            os << '\n';
        }
        write_file(prefix + "_growth.csv", os.str(), written);
    }
    {
        std::ostringstream os;
        os << "n,engine_h1_lo,engine_h1_hi,closed_form_sum,difference,disagreeing_steps\n";
        for (const DiscrepancyRow& row : report.discrepancy) {
            std::string steps;
            for (std::size_t i = 0; i < row.disagreeing_steps.size(); ++i) {
                if (i) steps += ';';
                steps += std::to_string(row.disagreeing_steps[i]);
            }
            os << row.n << ',' << to_string(row.engine_h1.lo) << ',' << to_string(row.engine_h1.hi)
               << ',' << to_string(row.closed_form_sum) << ',' << to_string(row.difference) << ','
               << steps << '\n';
        }
        write_file(prefix + "_discrepancy.csv", os.str(), written);
    }
    return written;
}

}  // namespace plumbcalc
