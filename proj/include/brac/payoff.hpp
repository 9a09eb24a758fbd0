#pragma once

#include "brac/rational.hpp"

#include <string_view>

namespace brac {

// Payoff schedule of the binary task: T_YES points for a correct YES, one
// point for a correct NO. t_yes is exact so that classical bounds and
// best-response comparisons are free of rounding.
struct PayoffConfig {
    int d = 2;
    Rational t_yes = 1;

    Rational t_d() const { return t_yes + (d - 1); } // normalization T_YES + d - 1
    Rational p_crit() const { return Rational(1) / (t_yes + 1); }

    double t_yes_real() const { return to_double(t_yes); }
    double t_d_real() const { return to_double(t_d()); }
    double p_crit_real() const { return to_double(p_crit()); }

    static PayoffConfig from_t_yes(int d, Rational t_yes);
    // Decimal text ("1.99940") becomes the exact fraction 9997/5000.
    static PayoffConfig from_t_yes_text(int d, std::string_view text);
    // Exact dyadic conversion of p, then t_yes = (1 - p)/p; the identity
    // p_crit() == p holds exactly, not just to tolerance.
    static PayoffConfig from_p_crit(int d, double p_crit);
};

} // namespace brac
