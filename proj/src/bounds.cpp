#include "brac/bounds.hpp"

#include "brac/errors.hpp"

#include <cmath>

namespace brac {

namespace {

void check_config(const TaskParams& params, const PayoffConfig& cfg) {
    params.validate();
    if (cfg.d != params.d) throw DimensionMismatch("payoff config dimension disagrees with task");
}

} // namespace

Rational binary_rac_classical_value(const TaskParams& params, const PayoffConfig& cfg,
                                    std::size_t cap) {
    check_config(params, cfg);
    BigInt count = composition_count(params);
    if (count > cap)
        throw CapExceeded("composition count " + count.str() + " exceeds cap " +
                          std::to_string(cap));

    const Rational yes_weight = cfg.t_yes + 1;
    const Rational flat = Rational(params.n) * (params.d - 2);
    Rational sum = 0;
    for_each_count_multiset(params,
                            [&](const BigInt& arrangements, const BigInt& words, int max_count) {
                                sum += Rational(arrangements * words) *
                                       (yes_weight * max_count + flat);
                            });
    Rational norm = Rational(BigInt(params.n) * ipow(params.d, static_cast<unsigned>(params.n))) *
                    cfg.t_d();
    return sum / norm;
}

Rational binary_from_standard(const Rational& t_standard, int d, const PayoffConfig& cfg) {
    if (cfg.d != d) throw DimensionMismatch("payoff config dimension disagrees");
    if (t_standard < 0 || t_standard > 1)
        throw InvalidParams("standard RAC value must lie in [0, 1]");
    return ((cfg.t_yes + 1) * t_standard + (d - 2)) / cfg.t_d();
}

Rational binary_classical_n2(int d, const PayoffConfig& cfg) {
    if (d < 2) throw InvalidParams("dimension d must be >= 2");
    if (cfg.d != d) throw DimensionMismatch("payoff config dimension disagrees");
    Rational numerator = cfg.t_yes + 1 + Rational(d) * (2 * d - 3 + cfg.t_yes);
    return numerator / (Rational(2 * d) * cfg.t_d());
}

double binary_quantum_n2(int d, const PayoffConfig& cfg) {
    if (d < 2) throw InvalidParams("dimension d must be >= 2");
    if (cfg.d != d) throw DimensionMismatch("payoff config dimension disagrees");
    double t = cfg.t_yes_real();
    double rd = std::sqrt(static_cast<double>(d));
    return (t + 1.0 + rd * (2.0 * d + t - 3.0)) / (2.0 * rd * cfg.t_d_real());
}

double quantum_classical_gap(int d, const PayoffConfig& cfg) {
    if (d < 2) throw InvalidParams("dimension d must be >= 2");
    if (cfg.d != d) throw DimensionMismatch("payoff config dimension disagrees");
    double t = cfg.t_yes_real();
    double rd = std::sqrt(static_cast<double>(d));
    return (t + 1.0) * (rd - 1.0) / (2.0 * d * cfg.t_d_real());
}

BoundReport make_bound_report(const TaskParams& params, const PayoffConfig& cfg,
                              std::size_t cap) {
    check_config(params, cfg);
    BoundReport report;
    report.d = params.d;
    report.n = params.n;
    report.t_yes = cfg.t_yes;

    if (composition_count(params) <= cap) {
        report.classical_standard = standard_rac_classical_value(params, cap);
        report.classical_binary = binary_rac_classical_value(params, cfg, cap);
        report.classical_provenance = "enumeration";
    } else if (params.n == 2) {
        report.classical_standard = standard_rac_value_n2(params.d);
        report.classical_binary = binary_classical_n2(params.d, cfg);
        report.classical_provenance = "closed_form_n2";
    } else {
        throw CapExceeded("no closed form available beyond the composition cap for n=" +
                          std::to_string(params.n));
    }
    if (params.n == 2) {
        report.quantum_binary_n2 = binary_quantum_n2(params.d, cfg);
        report.gap = quantum_classical_gap(params.d, cfg);
    }
    return report;
}

} // namespace brac
