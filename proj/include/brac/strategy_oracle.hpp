#pragma once

#include "brac/combinatorics.hpp"
#include "brac/payoff.hpp"
#include "brac/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace brac {

// Alice's input word a_0 ... a_{n-1}, letters in {0, ..., d-1}.
using DitString = std::vector<int>;

// Enumeration caps. Word tables are materialized, so d^n is capped hard;
// the strategy-space caps bound what explicit searches will attempt.
inline constexpr std::size_t kMaxOracleWords = 1'000'000;
inline constexpr double kMaxEncodingSpace = 1e8; // d^(d^n), explicit encoding search
inline constexpr double kMaxDecodingSpace = 1e4; // d^(n*d), joint decoding search

// d^n; CapExceeded beyond kMaxOracleWords.
std::size_t word_count(const TaskParams& params);

// Words are ordered lexicographically; a_0 is the most significant digit.
std::size_t word_index(std::span<const int> letters, int d);
DitString word_letters(std::size_t index, const TaskParams& params);
void validate_dit_string(const DitString& a, const TaskParams& params);

// Most frequent letter; ties broken toward the smallest letter value.
int majority_letter(std::span<const int> letters);

// Deterministic encoding E: one message per word, stored in word order.
struct EncodingStrategy {
    TaskParams params;
    std::vector<int> table;

    int message(std::size_t word) const { return table[word]; }
    void validate() const;

    static EncodingStrategy constant(const TaskParams& params, int message);
    static EncodingStrategy projection(const TaskParams& params, int position); // E(a) = a_pos
    static EncodingStrategy majority(const TaskParams& params);
};

// Deterministic decoding maps D_y: message -> output, one per input y.
struct StandardDecoding {
    std::vector<std::vector<int>> maps; // maps[y][m] = b

    void validate(const TaskParams& params) const;
    static StandardDecoding identity(const TaskParams& params);
};

// (1/(n d^n)) * #{(a, y) : D_y(E(a)) = a_y}, exact.
Rational evaluate_standard_strategy(const EncodingStrategy& encoding,
                                    const StandardDecoding& decoding, const TaskParams& params);

enum class BruteForceMode {
    identity_decoding, // optimum over all encodings with D_y(m) = m
    joint,             // optimum over all encodings x all decodings
};

struct StandardSearchResult {
    Rational value;
    EncodingStrategy encoding;
    StandardDecoding decoding;
};

// Exact optimum over the requested strategy class. With the decoding fixed
// the objective is separable per word, so the encoding optimum is computed
// by per-word maximization rather than d^(d^n) table enumeration; the
// witness is the lexicographically smallest argmax encoding either way.
// Joint mode enumerates all decoding tuples explicitly.
StandardSearchResult brute_force_standard(const TaskParams& params, BruteForceMode mode);

// Bob's answer table for the binary task: G in {0,1} per (message, y, k).
struct BinaryDecodingTable {
    TaskParams params;
    std::vector<std::uint8_t> guess;        // (m*n + y)*d + k -> G
    std::vector<std::uint8_t> message_used; // message ever sent by the paired encoding

    std::uint8_t g(int m, int y, int k) const {
        return guess[(static_cast<std::size_t>(m) * params.n + y) * params.d + k];
    }
    void validate(const TaskParams& params) const;

    static BinaryDecodingTable all_no(const TaskParams& params); // G = 1 everywhere
};

// Per-(m, y, k) optimal answer given the encoding: G = 0 iff
// t_yes * p(a_y = k | m, y) >= p(a_y != k | m, y), decided in exact
// arithmetic; ties answer YES. Messages never sent are flagged in
// message_used and answer NO by convention.
BinaryDecodingTable best_response_binary_decoding(const EncodingStrategy& encoding,
                                                  const PayoffConfig& cfg,
                                                  const TaskParams& params);

// Normalized average payoff (1/(n d^n T_d)) sum over (a, y, k) of
// t_yes * [G=0 and a_y=k] + [G=1 and a_y!=k], exact.
Rational evaluate_binary_strategy(const EncodingStrategy& encoding,
                                  const BinaryDecodingTable& decoding, const PayoffConfig& cfg,
                                  const TaskParams& params);

struct BinarySearchResult {
    Rational value;
    EncodingStrategy encoding;
};

// Explicit search over all encodings, each paired with its exact best
// response; decoding decomposes per (m, y, k), so this is the deterministic
// optimum of the binary task.
BinarySearchResult brute_force_binary(const TaskParams& params, const PayoffConfig& cfg);

// H(a) - sum_i H_i = n log2 d - sum_i sum_m p(m) H(a_i | m), in bits.
// Bounded above by the one-dit channel capacity log2 d.
double information_causality_lhs(const EncodingStrategy& encoding, const TaskParams& params);

} // namespace brac
