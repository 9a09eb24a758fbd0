#include "brac/bounds.hpp"
#include "brac/combinatorics.hpp"
#include "brac/errors.hpp"
#include "brac/payoff.hpp"
#include "brac/pcrit_solver.hpp"
#include "brac/quantum_sim.hpp"
#include "brac/statistics.hpp"
#include "brac/strategy_oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using brac::Rational;
using nlohmann::json;

double sig(double v) { return std::stod(brac::format_sig(v)); }

json rational_json(const Rational& r) {
    return json{{"fraction", brac::fraction_string(r)}, {"decimal", sig(brac::to_double(r))}};
}

brac::StatsFormat format_for_path(const std::string& path, const std::string& requested) {
    if (requested == "json") return brac::StatsFormat::json;
    if (requested == "csv") return brac::StatsFormat::csv;
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return brac::StatsFormat::csv;
    return brac::StatsFormat::json;
}

void emit(const json& doc, bool csv, const std::vector<std::string>& columns) {
    if (!csv) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    auto print_row = [&](const json& row) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i > 0) std::cout << ",";
            const json& cell = row.at(columns[i]);
            if (cell.is_string())
                std::cout << cell.get<std::string>();
            else
                std::cout << cell.dump();
        }
        std::cout << "\n";
    };
    for (std::size_t i = 0; i < columns.size(); ++i)
        std::cout << (i > 0 ? "," : "") << columns[i];
    std::cout << "\n";
    if (doc.is_array())
        for (const json& row : doc) print_row(row);
    else
        print_row(doc);
}

json bound_report_json(const brac::BoundReport& report) {
    json doc{{"d", report.d},
             {"n", report.n},
             {"t_yes", brac::decimal_or_fraction_string(report.t_yes)},
             {"classical_standard", rational_json(report.classical_standard)},
             {"classical_binary", rational_json(report.classical_binary)},
             {"classical_provenance", report.classical_provenance}};
    if (report.quantum_binary_n2) doc["quantum_binary_n2"] = sig(*report.quantum_binary_n2);
    if (report.gap) doc["gap"] = sig(*report.gap);
    return doc;
}

json pcrit_json(const brac::PcritResult& result) {
    return json{{"d", result.d},
                {"epsilon", result.epsilon},
                {"p_crit", sig(result.p_crit)},
                {"t_yes", sig(result.t_yes)}};
}

json certification_json(const brac::CertificationReport& report) {
    json doc{{"d_claim", report.d_claim},
             {"n", report.n},
             {"t_yes", brac::decimal_or_fraction_string(report.t_yes)},
             {"observed_payoff", sig(report.observed)},
             {"classical_bound", rational_json(report.classical_bound)},
             {"margin", sig(report.margin)},
             {"verdict", report.certified ? "certified" : "not certified"}};
    if (report.quantum_reference) doc["quantum_reference_n2"] = sig(*report.quantum_reference);
    doc["statement"] = report.certified
                           ? "observed payoff exceeds the d=" + std::to_string(report.d_claim) +
                                 " classical bound: the communicated system has dimension at "
                                 "least " +
                                 std::to_string(report.d_claim)
                           : "observed payoff does not exceed the d=" +
                                 std::to_string(report.d_claim) + " classical bound";
    return doc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical and quantum bounds, p_crit scans, simulation and dimension "
                 "certification for binary random access codes"};
    app.require_subcommand(1);

    // bounds
    int b_d = 3, b_n = 2;
    std::string b_tyes = "1";
    bool b_csv = false;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "classical and quantum payoff bounds");
    bounds_cmd->add_option("--d", b_d, "dimension")->required();
    bounds_cmd->add_option("--n", b_n, "word length")->required();
    bounds_cmd->add_option("--tyes", b_tyes, "payoff for a correct YES (exact decimal or p/q)")
        ->required();
    bounds_cmd->add_flag("--csv", b_csv, "emit CSV instead of JSON");
    bounds_cmd->callback([&] {
        brac::TaskParams params{b_d, b_n};
        brac::PayoffConfig cfg = brac::PayoffConfig::from_t_yes_text(b_d, b_tyes);
        brac::BoundReport report = brac::make_bound_report(params, cfg);
        json doc = bound_report_json(report);
        if (b_csv) {
            doc["classical_standard"] = sig(brac::to_double(report.classical_standard));
            doc["classical_binary"] = sig(brac::to_double(report.classical_binary));
            if (!report.quantum_binary_n2) {
                doc["quantum_binary_n2"] = "";
                doc["gap"] = "";
            }
        }
        emit(doc, b_csv,
             {"d", "n", "t_yes", "classical_standard", "classical_binary", "quantum_binary_n2",
              "gap"});
    });

    // pcrit
    int p_d = 3;
    double p_eps = 1e-5;
    CLI::App* pcrit_cmd = app.add_subcommand("pcrit", "scan for the minimal p_crit");
    pcrit_cmd->add_option("--d", p_d, "dimension")->required();
    pcrit_cmd->add_option("--eps", p_eps, "scan increment");
    pcrit_cmd->callback([&] { std::cout << pcrit_json(brac::find_pcrit(p_d, p_eps)).dump(2) << "\n"; });

    // pcrit-table
    std::vector<int> t_dims;
    double t_eps = 1e-5;
    bool t_csv = false;
    CLI::App* ptable_cmd = app.add_subcommand("pcrit-table", "p_crit scan for several dimensions");
    ptable_cmd->add_option("--dims", t_dims, "comma-separated dimensions")
        ->required()
        ->delimiter(',');
    ptable_cmd->add_option("--eps", t_eps, "scan increment");
    ptable_cmd->add_flag("--csv", t_csv, "emit CSV instead of JSON");
    ptable_cmd->callback([&] {
        json rows = json::array();
        for (int d : t_dims) rows.push_back(pcrit_json(brac::find_pcrit(d, t_eps)));
        emit(rows, t_csv, {"d", "epsilon", "p_crit", "t_yes"});
    });

    // oracle
    int o_d = 2, o_n = 2;
    bool o_binary = false, o_joint = false;
    std::string o_tyes = "1";
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "exhaustive deterministic-strategy optimum");
    oracle_cmd->add_option("--d", o_d, "dimension")->required();
    oracle_cmd->add_option("--n", o_n, "word length")->required();
    oracle_cmd->add_flag("--binary", o_binary, "binary task with best-response decoding");
    oracle_cmd->add_option("--tyes", o_tyes, "payoff for a correct YES (binary task)");
    oracle_cmd->add_flag("--joint", o_joint,
                         "standard task: search decodings jointly with encodings");
    oracle_cmd->callback([&] {
        brac::TaskParams params{o_d, o_n};
        json doc;
        if (o_binary) {
            brac::PayoffConfig cfg = brac::PayoffConfig::from_t_yes_text(o_d, o_tyes);
            brac::BinarySearchResult result = brac::brute_force_binary(params, cfg);
            doc = json{{"task", "binary"},
                       {"d", o_d},
                       {"n", o_n},
                       {"t_yes", brac::decimal_or_fraction_string(cfg.t_yes)},
                       {"optimal_value", rational_json(result.value)},
                       {"witness_encoding", result.encoding.table}};
        } else {
            brac::BruteForceMode mode = o_joint ? brac::BruteForceMode::joint
                                                : brac::BruteForceMode::identity_decoding;
            brac::StandardSearchResult result = brac::brute_force_standard(params, mode);
            doc = json{{"task", "standard"},
                       {"d", o_d},
                       {"n", o_n},
                       {"mode", o_joint ? "joint" : "identity_decoding"},
                       {"optimal_value", rational_json(result.value)},
                       {"witness_encoding", result.encoding.table},
                       {"witness_decoding", result.decoding.maps}};
        }
        std::cout << doc.dump(2) << "\n";
    });

    // simulate
    int s_d = 2;
    std::string s_tyes = "1";
    std::string s_export;
    bool s_literal = false;
    std::string s_strategy = "quantum";
    CLI::App* sim_cmd = app.add_subcommand("simulate", "n=2 protocol simulation and export");
    sim_cmd->add_option("--d", s_d, "dimension")->required();
    sim_cmd->add_option("--tyes", s_tyes, "payoff for a correct YES")->required();
    sim_cmd->add_option("--export", s_export, "write the statistics table to this path");
    sim_cmd->add_flag("--paper-literal-state", s_literal,
                      "use the unaligned encoded states (comparison run)");
    sim_cmd->add_option("--strategy", s_strategy, "quantum or majority (classical)")
        ->check(CLI::IsMember({"quantum", "majority"}));
    sim_cmd->callback([&] {
        brac::PayoffConfig cfg = brac::PayoffConfig::from_t_yes_text(s_d, s_tyes);
        brac::StateConvention convention = s_literal ? brac::StateConvention::paper_literal
                                                     : brac::StateConvention::phase_aligned;
        brac::StatisticsTable table =
            s_strategy == "quantum"
                ? brac::quantum_statistics_table(s_d, cfg, convention)
                : brac::majority_statistics_table(brac::TaskParams{s_d, 2}, cfg);
        double payoff = brac::payoff_from_statistics(table);
        Rational classical = brac::binary_classical_n2(s_d, cfg);
        json doc{{"d", s_d},
                 {"n", 2},
                 {"t_yes", brac::decimal_or_fraction_string(cfg.t_yes)},
                 {"strategy", s_strategy},
                 {"simulated_payoff", sig(payoff)},
                 {"classical_bound", rational_json(classical)},
                 {"quantum_closed_form", sig(brac::binary_quantum_n2(s_d, cfg))},
                 {"gap_closed_form", sig(brac::quantum_classical_gap(s_d, cfg))}};
        if (s_strategy == "quantum")
            doc["state_convention"] = s_literal ? "paper_literal" : "phase_aligned";
        if (!s_export.empty()) {
            brac::save_statistics(table, s_export, format_for_path(s_export, "auto"));
            doc["exported"] = s_export;
        }
        std::cout << doc.dump(2) << "\n";
    });

    // certify
    std::string c_input;
    int c_claim = 2;
    std::string c_tyes;
    std::string c_format = "auto";
    CLI::App* certify_cmd =
        app.add_subcommand("certify", "certify a dimension lower bound from statistics");
    certify_cmd->add_option("--input", c_input, "statistics file (JSON or CSV)")->required();
    certify_cmd->add_option("--claim", c_claim, "claimed dimension")->required();
    certify_cmd->add_option("--tyes", c_tyes, "t_yes override (required for CSV)");
    certify_cmd->add_option("--format", c_format, "auto, json or csv")
        ->check(CLI::IsMember({"auto", "json", "csv"}));
    certify_cmd->callback([&] {
        std::optional<Rational> t_override;
        if (!c_tyes.empty()) t_override = brac::rational_from_string(c_tyes);
        brac::StatisticsTable table =
            brac::load_statistics(c_input, format_for_path(c_input, c_format), t_override);
        brac::CertificationReport report = brac::certify_dimension(table, c_claim);
        std::cout << certification_json(report).dump(2) << "\n";
    });

    // curves
    int cu_d = 8;
    double cu_pcrit = 0.18495;
    std::vector<int> cu_x{1, 2, 3, 4};
    int cu_samples = 200;
    std::string cu_out;
    CLI::App* curves_cmd = app.add_subcommand("curves", "entropy-vs-payoff curve family (CSV)");
    curves_cmd->add_option("--d", cu_d, "dimension")->required();
    curves_cmd->add_option("--pcrit", cu_pcrit, "critical probability")->required();
    curves_cmd->add_option("--x", cu_x, "comma-separated x values")->delimiter(',');
    curves_cmd->add_option("--samples", cu_samples, "sample count");
    curves_cmd->add_option("--out", cu_out, "output CSV path")->required();
    curves_cmd->callback([&] {
        brac::CurveFamily fam = brac::emit_curves(cu_d, cu_pcrit, cu_x, cu_samples);
        std::ofstream out(cu_out);
        if (!out) throw brac::ParseError("cannot write '" + cu_out + "'");
        brac::write_curves_csv(fam, out);
        json doc{{"d", fam.d},
                 {"p_crit", sig(fam.p_crit)},
                 {"t_lower", sig(fam.t0)},
                 {"rows", fam.points.size()},
                 {"out", cu_out}};
        json limits = json::object();
        for (std::size_t c = 0; c < fam.x_values.size(); ++c)
            limits["x" + std::to_string(fam.x_values[c])] = sig(fam.t1[c]);
        doc["t_upper"] = limits;
        std::cout << doc.dump(2) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const brac::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const brac::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
