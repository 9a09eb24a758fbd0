#include "brac/combinatorics.hpp"

#include "brac/errors.hpp"

#include <algorithm>
#include <string>

namespace brac {

void TaskParams::validate() const {
    if (d < 2) throw InvalidParams("dimension d must be >= 2, got " + std::to_string(d));
    if (n < 1) throw InvalidParams("word length n must be >= 1, got " + std::to_string(n));
}

void Composition::validate(const TaskParams& params) const {
    params.validate();
    if (static_cast<int>(counts.size()) != params.d)
        throw InvalidParams("composition has " + std::to_string(counts.size()) +
                            " parts, expected d=" + std::to_string(params.d));
    long long total = 0;
    for (int c : counts) {
        if (c < 0) throw InvalidParams("negative composition entry");
        total += c;
    }
    if (total != params.n)
        throw InvalidParams("composition entries sum to " + std::to_string(total) +
                            ", expected n=" + std::to_string(params.n));
}

BigInt composition_count(const TaskParams& params) {
    params.validate();
    return binomial(static_cast<unsigned>(params.n + params.d - 1),
                    static_cast<unsigned>(params.d - 1));
}

namespace {

void check_cap(const TaskParams& params, std::size_t cap) {
    BigInt count = composition_count(params);
    if (count > cap)
        throw CapExceeded("composition count " + count.str() + " exceeds cap " +
                          std::to_string(cap) + " for (n=" + std::to_string(params.n) +
                          ", d=" + std::to_string(params.d) + ")");
}

void visit_rec(std::vector<int>& buffer, int position, int remaining,
               const std::function<void(std::span<const int>)>& visit) {
    if (position == static_cast<int>(buffer.size()) - 1) {
        buffer[position] = remaining;
        visit(buffer);
        return;
    }
    for (int value = remaining; value >= 0; --value) {
        buffer[position] = value;
        visit_rec(buffer, position + 1, remaining - value, visit);
    }
}

} // namespace

void for_each_composition(const TaskParams& params,
                          const std::function<void(std::span<const int>)>& visit,
                          std::size_t cap) {
    check_cap(params, cap);
    std::vector<int> buffer(static_cast<std::size_t>(params.d), 0);
    visit_rec(buffer, 0, params.n, visit);
}

std::vector<Composition> enumerate_compositions(const TaskParams& params, std::size_t cap) {
    std::vector<Composition> out;
    out.reserve(composition_count(params).convert_to<std::size_t>());
    for_each_composition(
        params,
        [&](std::span<const int> counts) {
            out.push_back(Composition{std::vector<int>(counts.begin(), counts.end())});
        },
        cap);
    return out;
}

BigInt multinomial(std::span<const int> counts) {
    int n = 0;
    for (int c : counts) {
        if (c < 0) throw InvalidParams("negative composition entry");
        n += c;
    }
    BigInt result = 1;
    int placed = n;
    for (int c : counts) {
        if (c == 0) continue;
        result *= binomial(static_cast<unsigned>(placed), static_cast<unsigned>(c));
        placed -= c;
    }
    return result;
}

BigInt multinomial(const Composition& c) {
    return multinomial(std::span<const int>(c.counts));
}

void for_each_count_multiset(
    const TaskParams& params,
    const std::function<void(const BigInt&, const BigInt&, int)>& visit) {
    params.validate();

    // parts: current non-increasing partition prefix of n.
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(params.n));

    auto emit = [&]() {
        int r = static_cast<int>(parts.size());
        BigInt arrangements =
            binomial(static_cast<unsigned>(params.d), static_cast<unsigned>(r)) *
            factorial(static_cast<unsigned>(r));
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            arrangements /= factorial(static_cast<unsigned>(j - i));
            i = j;
        }
        BigInt words = factorial(static_cast<unsigned>(params.n));
        for (int p : parts) words /= factorial(static_cast<unsigned>(p));
        visit(arrangements, words, parts.front());
    };

    std::function<void(int, int)> rec = [&](int remaining, int largest_allowed) {
        if (remaining == 0) {
            emit();
            return;
        }
        if (static_cast<int>(parts.size()) == params.d) return; // no room for more parts
        int hi = std::min(remaining, largest_allowed);
        for (int part = hi; part >= 1; --part) {
            parts.push_back(part);
            rec(remaining - part, part);
            parts.pop_back();
        }
    };
    rec(params.n, params.n);
}

Rational standard_rac_classical_value(const TaskParams& params, std::size_t cap) {
    check_cap(params, cap);
    BigInt weighted_sum = 0;
    for_each_count_multiset(params,
                            [&](const BigInt& arrangements, const BigInt& words, int max_count) {
                                weighted_sum += arrangements * words * max_count;
                            });
    BigInt denom = BigInt(params.n) * ipow(params.d, static_cast<unsigned>(params.n));
    return Rational(weighted_sum, denom);
}

Rational standard_rac_value_n2(int d) {
    if (d < 2) throw InvalidParams("dimension d must be >= 2, got " + std::to_string(d));
    return Rational(d + 1, 2 * d);
}

} // namespace brac
