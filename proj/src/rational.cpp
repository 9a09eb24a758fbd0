#include "brac/rational.hpp"

#include "brac/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace brac {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // always divides: r is C(n, i+1) * (i+1)! / (i+1)! pattern
    }
    return r;
}

BigInt ipow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_decimal(std::string_view s) {
    bool negative = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }

    std::string digits;
    long long scale = 0; // value = digits * 10^scale
    bool seen_digit = false;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) --scale;
            seen_digit = true;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw ParseError("not a number: '" + std::string(s) + "'");

    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            exp_neg = s[pos] == '-';
            ++pos;
        }
        std::string_view exp_digits = s.substr(pos);
        if (!all_digits(exp_digits))
            throw ParseError("malformed exponent in '" + std::string(s) + "'");
        long long e = std::stoll(std::string(exp_digits));
        scale += exp_neg ? -e : e;
        pos = s.size();
    }
    if (pos != s.size())
        throw ParseError("trailing characters in number '" + std::string(s) + "'");

    BigInt mantissa(digits);
    if (negative) mantissa = -mantissa;
    if (scale >= 0) return Rational(mantissa * ipow(10, static_cast<unsigned>(scale)));
    return Rational(mantissa, ipow(10, static_cast<unsigned>(-scale)));
}

} // namespace

Rational rational_from_string(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t");
    std::size_t last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos) throw ParseError("empty number");
    std::string_view s = text.substr(first, last - first + 1);

    if (std::size_t slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        std::string_view num_digits = num;
        if (!num_digits.empty() && (num_digits[0] == '+' || num_digits[0] == '-'))
            num_digits.remove_prefix(1);
        if (!all_digits(num_digits) || !all_digits(den))
            throw ParseError("malformed fraction '" + std::string(s) + "'");
        BigInt d(std::string(den));
        if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        return Rational(BigInt(std::string(num)), d);
    }
    return parse_decimal(s);
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
    return Rational(value);
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

std::string fraction_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string decimal_or_fraction_string(const Rational& r) {
    BigInt den = denominator(r);
    unsigned twos = 0;
    unsigned fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return fraction_string(r);

    unsigned places = std::max(twos, fives);
    BigInt scaled = numerator(r) * ipow(10, places) / denominator(r);
    bool negative = scaled < 0;
    std::string digits = abs(scaled).str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = negative ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

std::string format_sig(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
    return buf;
}

} // namespace brac
