#pragma once

#include "brac/rational.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace brac {

inline constexpr std::size_t kDefaultCompositionCap = 1'000'000;

// Alphabet size d and word length n of the communication task.
struct TaskParams {
    int d = 2; // alphabet size, >= 2
    int n = 1; // word length, >= 1

    void validate() const;
};

// Letter-count profile (n_0, ..., n_{d-1}) of a length-n word; entries sum to n.
struct Composition {
    std::vector<int> counts;

    void validate(const TaskParams& params) const;
};

// C(n+d-1, d-1): the number of compositions of n into d non-negative parts.
BigInt composition_count(const TaskParams& params);

// Visits every composition exactly once, in lexicographically decreasing
// order of the count vectors. The span is a reused buffer; copy to keep.
void for_each_composition(const TaskParams& params,
                          const std::function<void(std::span<const int>)>& visit,
                          std::size_t cap = kDefaultCompositionCap);

std::vector<Composition> enumerate_compositions(const TaskParams& params,
                                                std::size_t cap = kDefaultCompositionCap);

// n! / (n_0! ... n_{d-1}!): words sharing the count profile.
BigInt multinomial(std::span<const int> counts);
BigInt multinomial(const Composition& c);

// Visits count profiles grouped by their value multiset (one call per
// partition of n into at most d parts). arrangements = number of
// compositions in the orbit, words_per = multinomial of any of them,
// max_count = largest part. Summing arrangements*words_per over all calls
// gives d^n.
void for_each_count_multiset(
    const TaskParams& params,
    const std::function<void(const BigInt& arrangements, const BigInt& words_per, int max_count)>&
        visit);

// Optimal standard RAC success probability (1/(n d^n)) sum multinomial(c)*max(c),
// exact. The sum is evaluated over multiset orbits, which reorganizes but does
// not approximate it.
Rational standard_rac_classical_value(const TaskParams& params,
                                      std::size_t cap = kDefaultCompositionCap);

// Closed form (d+1)/(2d) for n = 2.
Rational standard_rac_value_n2(int d);

} // namespace brac
