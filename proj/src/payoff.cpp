#include "brac/payoff.hpp"

#include "brac/errors.hpp"

#include <string>

namespace brac {

PayoffConfig PayoffConfig::from_t_yes(int d, Rational t_yes) {
    if (d < 2) throw InvalidParams("dimension d must be >= 2, got " + std::to_string(d));
    if (t_yes <= 0) throw InvalidParams("t_yes must be positive");
    return PayoffConfig{d, std::move(t_yes)};
}

PayoffConfig PayoffConfig::from_t_yes_text(int d, std::string_view text) {
    return from_t_yes(d, rational_from_string(text));
}

PayoffConfig PayoffConfig::from_p_crit(int d, double p_crit) {
    if (!(p_crit > 0.0 && p_crit < 1.0))
        throw InvalidParams("p_crit must lie in (0, 1)");
    Rational p = rational_from_double(p_crit);
    return from_t_yes(d, (1 - p) / p);
}

} // namespace brac
