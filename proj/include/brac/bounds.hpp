#pragma once

#include "brac/combinatorics.hpp"
#include "brac/payoff.hpp"

#include <optional>
#include <string>

namespace brac {

// Classical bound of the binary task via majority encoding:
// (1/(n d^n T_d)) sum multinomial(c) [max(c)(t_yes + 1) + n(d - 2)], exact.
Rational binary_rac_classical_value(const TaskParams& params, const PayoffConfig& cfg,
                                    std::size_t cap = kDefaultCompositionCap);

// Affine map from a standard RAC value to the binary payoff:
// ((t_yes + 1) t_standard + d - 2) / T_d.
Rational binary_from_standard(const Rational& t_standard, int d, const PayoffConfig& cfg);

// n = 2 closed form [t_yes + 1 + d(2d + t_yes - 3)] / (2 d T_d).
Rational binary_classical_n2(int d, const PayoffConfig& cfg);

// n = 2 quantum payoff [t_yes + 1 + sqrt(d)(2d + t_yes - 3)] / (2 sqrt(d) T_d).
double binary_quantum_n2(int d, const PayoffConfig& cfg);

// (t_yes + 1)(sqrt(d) - 1) / (2 d T_d); positive for every d >= 2.
double quantum_classical_gap(int d, const PayoffConfig& cfg);

struct BoundReport {
    int d = 0;
    int n = 0;
    Rational t_yes;
    Rational classical_standard;
    Rational classical_binary;
    std::string classical_provenance; // "enumeration" or "closed_form_n2"
    std::optional<double> quantum_binary_n2;
    std::optional<double> gap;
};

// Falls back to the n = 2 closed forms when the composition cap is hit;
// CapExceeded for n != 2 beyond the cap.
BoundReport make_bound_report(const TaskParams& params, const PayoffConfig& cfg,
                              std::size_t cap = kDefaultCompositionCap);

} // namespace brac
