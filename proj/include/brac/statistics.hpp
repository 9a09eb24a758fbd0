#pragma once

#include "brac/combinatorics.hpp"
#include "brac/payoff.hpp"
#include "brac/quantum_sim.hpp"
#include "brac/strategy_oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brac {

// Observed conditional probabilities p(G | a, y, k) for one experiment,
// under uniformly distributed inputs. Complete: one entry per (a, y, k).
struct StatisticsTable {
    int d = 0;
    int n = 0;
    Rational t_yes = 1;
    std::vector<double> p_yes; // indexed (word * n + y) * d + k
    std::vector<double> p_no;

    std::size_t index(std::size_t word, int y, int k) const {
        return (word * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)) * d + k;
    }
    std::size_t entry_total() const;
    void validate() const;
};

enum class StatsFormat { json, csv };

// JSON: {d, n, t_yes, entries: [{a: [...], y, k, p0, p1}]}; entries may carry
// raw counts as c0/c1 instead, normalized at load. t_yes may be a decimal
// string (kept exact) or a number. CSV: a0,...,a_{n-1},y,k,p0,p1 with no
// metadata, so t_yes must be supplied by the caller.
StatisticsTable load_statistics(const std::string& path, StatsFormat format,
                                std::optional<Rational> t_yes_override = std::nullopt);

void save_statistics(const StatisticsTable& table, const std::string& path, StatsFormat format);

// (1/(n d^n T_d)) sum over (a, y, k) of t_yes p(G=0) [a_y = k] + p(G=1) [a_y != k].
double payoff_from_statistics(const StatisticsTable& table);

struct CertificationReport {
    int d_claim = 0;
    int n = 0;
    Rational t_yes;
    double observed = 0.0;
    Rational classical_bound;
    std::optional<double> quantum_reference; // n = 2 only
    double margin = 0.0;                     // observed - bound
    bool certified = false;
};

inline const Rational kCertificationSlack = Rational(1, 1'000'000'000);

// certified iff observed > classical bound + slack, compared as exact
// rationals (the observed double is converted exactly); payoff equal to the
// bound is not certified.
CertificationReport certify_dimension(const StatisticsTable& table, int d_claim,
                                      std::size_t cap = kDefaultCompositionCap);

// Synthetic-experiment generators.
StatisticsTable quantum_statistics_table(int d, const PayoffConfig& cfg,
                                         StateConvention convention = StateConvention::phase_aligned);
StatisticsTable strategy_statistics_table(const EncodingStrategy& encoding,
                                          const BinaryDecodingTable& decoding,
                                          const PayoffConfig& cfg);
// Majority encoding with its exact best-response decoding.
StatisticsTable majority_statistics_table(const TaskParams& params, const PayoffConfig& cfg);

} // namespace brac
