#include "brac/statistics.hpp"

#include "brac/bounds.hpp"
#include "brac/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace brac {

namespace {

using nlohmann::json;

constexpr double kPairSumTol = 1e-6;

std::string triple_name(std::size_t word, int y, int k, const TaskParams& params) {
    DitString a = word_letters(word, params);
    std::string s = "a=(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(a[i]);
    }
    s += ") y=" + std::to_string(y) + " k=" + std::to_string(k);
    return s;
}

struct EntryAccumulator {
    TaskParams params;
    std::vector<double> p_yes;
    std::vector<double> p_no;
    std::vector<bool> seen;

    EntryAccumulator(int d, int n) : params{d, n} {
        std::size_t total = word_count(params) * static_cast<std::size_t>(n) * d;
        p_yes.assign(total, 0.0);
        p_no.assign(total, 0.0);
        seen.assign(total, false);
    }

    void add(std::size_t word, int y, int k, double v0, double v1, bool counts) {
        std::size_t idx =
            (word * static_cast<std::size_t>(params.n) + static_cast<std::size_t>(y)) * params.d +
            k;
        if (seen[idx])
            throw SchemaError("duplicate entry for " + triple_name(word, y, k, params));
        seen[idx] = true;
        if (counts) {
            if (v0 < 0 || v1 < 0)
                throw NormalizationError("negative count at " + triple_name(word, y, k, params));
            double total = v0 + v1;
            if (total <= 0.0)
                throw NormalizationError("all-zero count pair at " +
                                         triple_name(word, y, k, params));
            p_yes[idx] = v0 / total;
            p_no[idx] = v1 / total;
        } else {
            if (v0 < -kPairSumTol || v1 < -kPairSumTol || v0 > 1 + kPairSumTol ||
                v1 > 1 + kPairSumTol)
                throw NormalizationError("probability outside [0, 1] at " +
                                         triple_name(word, y, k, params));
            if (std::abs(v0 + v1 - 1.0) > kPairSumTol)
                throw NormalizationError("probability pair sums to " + format_sig(v0 + v1) +
                                         " at " + triple_name(word, y, k, params));
            p_yes[idx] = v0;
            p_no[idx] = v1;
        }
    }

    void check_complete() const {
        for (std::size_t idx = 0; idx < seen.size(); ++idx) {
            if (!seen[idx]) {
                int k = static_cast<int>(idx % params.d);
                int y = static_cast<int>((idx / params.d) % params.n);
                std::size_t word = idx / params.d / params.n;
                throw SchemaError("missing entry for " + triple_name(word, y, k, params));
            }
        }
    }
};

StatisticsTable load_json(const std::string& path, std::optional<Rational> t_yes_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }

    if (!doc.is_object() || !doc.contains("d") || !doc.contains("n") || !doc.contains("entries"))
        throw SchemaError("expected top-level object with d, n, entries");
    if (doc.contains("input_distribution") && doc["input_distribution"] != "uniform")
        throw SchemaError("only the uniform input distribution is supported");

    StatisticsTable table;
    table.d = doc["d"].get<int>();
    table.n = doc["n"].get<int>();
    if (t_yes_override) {
        table.t_yes = *t_yes_override;
    } else if (doc.contains("t_yes")) {
        const json& t = doc["t_yes"];
        table.t_yes = t.is_string() ? rational_from_string(t.get<std::string>())
                                    : rational_from_double(t.get<double>());
    } else {
        throw SchemaError("t_yes missing (provide it in the file or via --tyes)");
    }

    EntryAccumulator acc(table.d, table.n);
    for (const json& entry : doc["entries"]) {
        if (!entry.contains("a") || !entry.contains("y") || !entry.contains("k"))
            throw SchemaError("entry missing a/y/k");
        DitString a = entry["a"].get<DitString>();
        validate_dit_string(a, acc.params);
        int y = entry["y"].get<int>();
        int k = entry["k"].get<int>();
        if (y < 0 || y >= table.n || k < 0 || k >= table.d)
            throw SchemaError("entry y/k out of range");
        std::size_t word = word_index(a, table.d);
        if (entry.contains("p0") && entry.contains("p1"))
            acc.add(word, y, k, entry["p0"].get<double>(), entry["p1"].get<double>(), false);
        else if (entry.contains("c0") && entry.contains("c1"))
            acc.add(word, y, k, entry["c0"].get<double>(), entry["c1"].get<double>(), true);
        else
            throw SchemaError("entry needs p0/p1 probabilities or c0/c1 counts");
    }
    acc.check_complete();
    table.p_yes = std::move(acc.p_yes);
    table.p_no = std::move(acc.p_no);
    table.validate();
    return table;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

StatisticsTable load_csv(const std::string& path, std::optional<Rational> t_yes_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    if (!t_yes_override)
        throw SchemaError("CSV statistics carry no t_yes; pass it explicitly");

    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV file '" + path + "'");
    std::vector<std::string> header = split_csv_line(line);
    int n = 0;
    while (n < static_cast<int>(header.size()) && header[n] == "a" + std::to_string(n)) ++n;
    if (n == 0 || header.size() != static_cast<std::size_t>(n) + 4 || header[n] != "y" ||
        header[n + 1] != "k" || header[n + 2] != "p0" || header[n + 3] != "p1")
        throw ParseError("expected CSV header a0,...,y,k,p0,p1");

    struct Row {
        DitString a;
        int y, k;
        double p0, p1;
    };
    std::vector<Row> rows;
    int max_letter = 1; // alphabet size is inferred; d >= 2 always
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " fields");
        try {
            Row row;
            row.a.resize(n);
            for (int i = 0; i < n; ++i) row.a[i] = std::stoi(fields[i]);
            row.y = std::stoi(fields[n]);
            row.k = std::stoi(fields[n + 1]);
            row.p0 = std::stod(fields[n + 2]);
            row.p1 = std::stod(fields[n + 3]);
            for (int letter : row.a) max_letter = std::max(max_letter, letter);
            max_letter = std::max(max_letter, row.k);
            rows.push_back(std::move(row));
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": malformed field");
        }
    }

    StatisticsTable table;
    table.d = max_letter + 1;
    table.n = n;
    table.t_yes = *t_yes_override;
    EntryAccumulator acc(table.d, table.n);
    for (const Row& row : rows) {
        validate_dit_string(row.a, acc.params);
        if (row.y < 0 || row.y >= table.n || row.k < 0 || row.k >= table.d)
            throw SchemaError("row y/k out of range");
        acc.add(word_index(row.a, table.d), row.y, row.k, row.p0, row.p1, false);
    }
    acc.check_complete();
    table.p_yes = std::move(acc.p_yes);
    table.p_no = std::move(acc.p_no);
    table.validate();
    return table;
}

} // namespace

std::size_t StatisticsTable::entry_total() const {
    return word_count(TaskParams{d, n}) * static_cast<std::size_t>(n) * d;
}

void StatisticsTable::validate() const {
    TaskParams params{d, n};
    params.validate();
    if (t_yes <= 0) throw InvalidParams("t_yes must be positive");
    if (p_yes.size() != entry_total() || p_no.size() != entry_total())
        throw SchemaError("statistics table has wrong entry count");
    for (std::size_t i = 0; i < p_yes.size(); ++i)
        if (std::abs(p_yes[i] + p_no[i] - 1.0) > kPairSumTol)
            throw NormalizationError("probability pair does not sum to 1");
}

StatisticsTable load_statistics(const std::string& path, StatsFormat format,
                                std::optional<Rational> t_yes_override) {
    return format == StatsFormat::json ? load_json(path, t_yes_override)
                                       : load_csv(path, t_yes_override);
}

void save_statistics(const StatisticsTable& table, const std::string& path, StatsFormat format) {
    table.validate();
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    TaskParams params{table.d, table.n};
    std::size_t words = word_count(params);

    if (format == StatsFormat::json) {
        json doc;
        doc["d"] = table.d;
        doc["n"] = table.n;
        doc["t_yes"] = decimal_or_fraction_string(table.t_yes);
        json entries = json::array();
        for (std::size_t w = 0; w < words; ++w) {
            DitString a = word_letters(w, params);
            for (int y = 0; y < table.n; ++y) {
                for (int k = 0; k < table.d; ++k) {
                    std::size_t idx = table.index(w, y, k);
                    entries.push_back(json{{"a", a},
                                           {"y", y},
                                           {"k", k},
                                           {"p0", std::stod(format_sig(table.p_yes[idx]))},
                                           {"p1", std::stod(format_sig(table.p_no[idx]))}});
                }
            }
        }
        doc["entries"] = std::move(entries);
        out << doc.dump(2) << "\n";
    } else {
        for (int i = 0; i < table.n; ++i) out << "a" << i << ",";
        out << "y,k,p0,p1\n";
        for (std::size_t w = 0; w < words; ++w) {
            DitString a = word_letters(w, params);
            for (int y = 0; y < table.n; ++y) {
                for (int k = 0; k < table.d; ++k) {
                    std::size_t idx = table.index(w, y, k);
                    for (int letter : a) out << letter << ",";
                    out << y << "," << k << "," << format_sig(table.p_yes[idx]) << ","
                        << format_sig(table.p_no[idx]) << "\n";
                }
            }
        }
    }
}

double payoff_from_statistics(const StatisticsTable& table) {
    table.validate();
    TaskParams params{table.d, table.n};
    std::size_t words = word_count(params);
    double t_yes = to_double(table.t_yes);
    double total = 0.0;
    for (std::size_t w = 0; w < words; ++w) {
        DitString a = word_letters(w, params);
        for (int y = 0; y < table.n; ++y) {
            for (int k = 0; k < table.d; ++k) {
                std::size_t idx = table.index(w, y, k);
                total += a[y] == k ? t_yes * table.p_yes[idx] : table.p_no[idx];
            }
        }
    }
    double t_d = t_yes + table.d - 1;
    return total / (static_cast<double>(table.n) * static_cast<double>(words) * t_d);
}

CertificationReport certify_dimension(const StatisticsTable& table, int d_claim,
                                      std::size_t cap) {
    table.validate();
    if (d_claim < 2) throw InvalidParams("claimed dimension must be >= 2");
    if (d_claim > table.d)
        throw InvalidParams("claimed dimension " + std::to_string(d_claim) +
                            " exceeds the table dimension " + std::to_string(table.d));

    PayoffConfig cfg = PayoffConfig::from_t_yes(d_claim, table.t_yes);
    TaskParams claim_params{d_claim, table.n};
    Rational bound;
    if (composition_count(claim_params) <= cap) {
        bound = binary_rac_classical_value(claim_params, cfg, cap);
    } else if (table.n == 2) {
        bound = binary_classical_n2(d_claim, cfg);
    } else {
        throw BoundUnavailable("classical bound enumeration exceeds the cap and no closed form "
                               "exists for n=" +
                               std::to_string(table.n));
    }

    CertificationReport report;
    report.d_claim = d_claim;
    report.n = table.n;
    report.t_yes = table.t_yes;
    report.observed = payoff_from_statistics(table);
    report.classical_bound = bound;
    if (table.n == 2) report.quantum_reference = binary_quantum_n2(d_claim, cfg);
    report.margin = report.observed - to_double(bound);
    report.certified = rational_from_double(report.observed) > bound + kCertificationSlack;
    return report;
}

StatisticsTable quantum_statistics_table(int d, const PayoffConfig& cfg,
                                         StateConvention convention) {
    if (cfg.d != d) throw DimensionMismatch("payoff config dimension disagrees");
    StatisticsTable table;
    table.d = d;
    table.n = 2;
    table.t_yes = cfg.t_yes;
    TaskParams params{d, 2};
    std::size_t words = word_count(params);
    table.p_yes.assign(words * 2 * d, 0.0);
    table.p_no.assign(words * 2 * d, 0.0);
    for (std::size_t w = 0; w < words; ++w) {
        DitString a = word_letters(w, params);
        QuantumState state = prepare_state(a[0], a[1], d, convention);
        for (int y = 0; y < 2; ++y) {
            for (int k = 0; k < d; ++k) {
                double p = born_probability(state, measurement(y, k, d));
                p = std::min(std::max(p, 0.0), 1.0);
                std::size_t idx = table.index(w, y, k);
                table.p_yes[idx] = p;
                table.p_no[idx] = 1.0 - p;
            }
        }
    }
    return table;
}

StatisticsTable strategy_statistics_table(const EncodingStrategy& encoding,
                                          const BinaryDecodingTable& decoding,
                                          const PayoffConfig& cfg) {
    const TaskParams& params = encoding.params;
    encoding.validate();
    decoding.validate(params);
    if (cfg.d != params.d) throw DimensionMismatch("payoff config dimension disagrees");

    StatisticsTable table;
    table.d = params.d;
    table.n = params.n;
    table.t_yes = cfg.t_yes;
    std::size_t words = word_count(params);
    table.p_yes.assign(words * params.n * params.d, 0.0);
    table.p_no.assign(words * params.n * params.d, 0.0);
    for (std::size_t w = 0; w < words; ++w) {
        int m = encoding.message(w);
        for (int y = 0; y < params.n; ++y) {
            for (int k = 0; k < params.d; ++k) {
                std::size_t idx = table.index(w, y, k);
                if (decoding.g(m, y, k) == 0)
                    table.p_yes[idx] = 1.0;
                else
                    table.p_no[idx] = 1.0;
            }
        }
    }
    return table;
}

StatisticsTable majority_statistics_table(const TaskParams& params, const PayoffConfig& cfg) {
    EncodingStrategy majority = EncodingStrategy::majority(params);
    BinaryDecodingTable best = best_response_binary_decoding(majority, cfg, params);
    return strategy_statistics_table(majority, best, cfg);
}

} // namespace brac
