#include "brac/strategy_oracle.hpp"

#include "brac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace brac {

namespace {

double log_space_size(double base, double exponent) {
    return exponent * std::log10(base);
}

void check_encoding_space(const TaskParams& params) {
    double words = std::pow(static_cast<double>(params.d), params.n);
    if (log_space_size(params.d, words) > std::log10(kMaxEncodingSpace))
        throw CapExceeded("encoding space d^(d^n) exceeds " + format_sig(kMaxEncodingSpace, 3) +
                          " for (n=" + std::to_string(params.n) +
                          ", d=" + std::to_string(params.d) + ")");
}

void check_decoding_space(const TaskParams& params) {
    if (log_space_size(params.d, static_cast<double>(params.n) * params.d) >
        std::log10(kMaxDecodingSpace))
        throw CapExceeded("decoding space d^(n*d) exceeds " + format_sig(kMaxDecodingSpace, 3) +
                          " for (n=" + std::to_string(params.n) +
                          ", d=" + std::to_string(params.d) + ")");
}

// Letters of every word, flattened to words*n ints.
std::vector<int> letter_table(const TaskParams& params) {
    std::size_t words = word_count(params);
    std::vector<int> letters(words * params.n);
    for (std::size_t w = 0; w < words; ++w) {
        std::size_t rest = w;
        for (int i = params.n - 1; i >= 0; --i) {
            letters[w * params.n + i] = static_cast<int>(rest % params.d);
            rest /= params.d;
        }
    }
    return letters;
}

// cnt[(m*n + y)*d + k] = #{a : E(a) = m, a_y = k}; tot[m] = #{a : E(a) = m}.
struct MessageCounts {
    std::vector<long long> cnt;
    std::vector<long long> tot;
};

MessageCounts message_counts(const EncodingStrategy& encoding, const std::vector<int>& letters,
                             const TaskParams& params) {
    MessageCounts mc;
    mc.cnt.assign(static_cast<std::size_t>(params.d) * params.n * params.d, 0);
    mc.tot.assign(static_cast<std::size_t>(params.d), 0);
    std::size_t words = encoding.table.size();
    for (std::size_t w = 0; w < words; ++w) {
        int m = encoding.table[w];
        ++mc.tot[m];
        for (int y = 0; y < params.n; ++y) {
            int k = letters[w * params.n + y];
            ++mc.cnt[(static_cast<std::size_t>(m) * params.n + y) * params.d + k];
        }
    }
    return mc;
}

} // namespace

std::size_t word_count(const TaskParams& params) {
    params.validate();
    std::size_t words = 1;
    for (int i = 0; i < params.n; ++i) {
        if (words > kMaxOracleWords / static_cast<std::size_t>(params.d))
            throw CapExceeded("word table d^n exceeds " + std::to_string(kMaxOracleWords) +
                              " for (n=" + std::to_string(params.n) +
                              ", d=" + std::to_string(params.d) + ")");
        words *= static_cast<std::size_t>(params.d);
    }
    return words;
}

std::size_t word_index(std::span<const int> letters, int d) {
    std::size_t index = 0;
    for (int a : letters) index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(a);
    return index;
}

DitString word_letters(std::size_t index, const TaskParams& params) {
    DitString letters(static_cast<std::size_t>(params.n));
    for (int i = params.n - 1; i >= 0; --i) {
        letters[i] = static_cast<int>(index % params.d);
        index /= params.d;
    }
    return letters;
}

void validate_dit_string(const DitString& a, const TaskParams& params) {
    if (static_cast<int>(a.size()) != params.n)
        throw DimensionMismatch("dit string length " + std::to_string(a.size()) +
                                ", expected n=" + std::to_string(params.n));
    for (int letter : a)
        if (letter < 0 || letter >= params.d)
            throw DimensionMismatch("letter " + std::to_string(letter) + " outside alphabet of size " +
                                    std::to_string(params.d));
}

int majority_letter(std::span<const int> letters) {
    if (letters.empty()) throw InvalidParams("majority of empty dit string");
    int max_letter = *std::max_element(letters.begin(), letters.end());
    std::vector<int> freq(static_cast<std::size_t>(max_letter) + 1, 0);
    for (int a : letters) {
        if (a < 0) throw InvalidParams("negative letter in dit string");
        ++freq[a];
    }
    int best = 0;
    for (int v = 1; v <= max_letter; ++v)
        if (freq[v] > freq[best]) best = v; // strict: ties stay at the smaller letter
    return best;
}

void EncodingStrategy::validate() const {
    params.validate();
    if (table.size() != word_count(params))
        throw DimensionMismatch("encoding table covers " + std::to_string(table.size()) +
                                " words, expected d^n");
    for (int m : table)
        if (m < 0 || m >= params.d) throw DimensionMismatch("encoding message outside alphabet");
}

EncodingStrategy EncodingStrategy::constant(const TaskParams& params, int message) {
    if (message < 0 || message >= params.d) throw InvalidParams("constant message outside alphabet");
    return EncodingStrategy{params, std::vector<int>(word_count(params), message)};
}

EncodingStrategy EncodingStrategy::projection(const TaskParams& params, int position) {
    if (position < 0 || position >= params.n) throw InvalidParams("projection position out of range");
    std::size_t words = word_count(params);
    EncodingStrategy e{params, std::vector<int>(words)};
    for (std::size_t w = 0; w < words; ++w) e.table[w] = word_letters(w, params)[position];
    return e;
}

EncodingStrategy EncodingStrategy::majority(const TaskParams& params) {
    std::size_t words = word_count(params);
    EncodingStrategy e{params, std::vector<int>(words)};
    for (std::size_t w = 0; w < words; ++w) {
        DitString a = word_letters(w, params);
        e.table[w] = majority_letter(a);
    }
    return e;
}

void StandardDecoding::validate(const TaskParams& params) const {
    if (static_cast<int>(maps.size()) != params.n)
        throw DimensionMismatch("decoding has " + std::to_string(maps.size()) +
                                " maps, expected n=" + std::to_string(params.n));
    for (const auto& map : maps) {
        if (static_cast<int>(map.size()) != params.d)
            throw DimensionMismatch("decoding map not total on the alphabet");
        for (int b : map)
            if (b < 0 || b >= params.d) throw DimensionMismatch("decoding output outside alphabet");
    }
}

StandardDecoding StandardDecoding::identity(const TaskParams& params) {
    StandardDecoding dec;
    dec.maps.assign(static_cast<std::size_t>(params.n), {});
    for (auto& map : dec.maps) {
        map.resize(static_cast<std::size_t>(params.d));
        for (int m = 0; m < params.d; ++m) map[m] = m;
    }
    return dec;
}

Rational evaluate_standard_strategy(const EncodingStrategy& encoding,
                                    const StandardDecoding& decoding, const TaskParams& params) {
    encoding.validate();
    decoding.validate(params);
    if (encoding.params.d != params.d || encoding.params.n != params.n)
        throw DimensionMismatch("encoding built for different task parameters");

    std::vector<int> letters = letter_table(params);
    std::size_t words = encoding.table.size();
    long long correct = 0;
    for (std::size_t w = 0; w < words; ++w) {
        int m = encoding.table[w];
        for (int y = 0; y < params.n; ++y)
            if (decoding.maps[y][m] == letters[w * params.n + y]) ++correct;
    }
    return Rational(BigInt(correct),
                    BigInt(params.n) * ipow(params.d, static_cast<unsigned>(params.n)));
}

namespace {

// Optimal encoding against a fixed decoding: the objective splits per word,
// so pick the smallest argmax message word by word. Returns the total number
// of correct (a, y) pairs.
long long best_encoding_for_decoding(const StandardDecoding& decoding,
                                     const std::vector<int>& letters, const TaskParams& params,
                                     std::vector<int>& table_out) {
    std::size_t words = table_out.size();
    long long total = 0;
    for (std::size_t w = 0; w < words; ++w) {
        int best_m = 0;
        int best_score = -1;
        for (int m = 0; m < params.d; ++m) {
            int score = 0;
            for (int y = 0; y < params.n; ++y)
                if (decoding.maps[y][m] == letters[w * params.n + y]) ++score;
            if (score > best_score) {
                best_score = score;
                best_m = m;
            }
        }
        table_out[w] = best_m;
        total += best_score;
    }
    return total;
}

} // namespace

StandardSearchResult brute_force_standard(const TaskParams& params, BruteForceMode mode) {
    std::size_t words = word_count(params);
    std::vector<int> letters = letter_table(params);
    BigInt denom = BigInt(params.n) * ipow(params.d, static_cast<unsigned>(params.n));

    if (mode == BruteForceMode::identity_decoding) {
        StandardDecoding identity = StandardDecoding::identity(params);
        EncodingStrategy witness{params, std::vector<int>(words)};
        long long total = best_encoding_for_decoding(identity, letters, params, witness.table);
        return StandardSearchResult{Rational(BigInt(total), denom), std::move(witness),
                                    std::move(identity)};
    }

    check_encoding_space(params);
    check_decoding_space(params);

    // Odometer over all decoding tuples, last entry fastest.
    StandardDecoding decoding = StandardDecoding::identity(params);
    for (auto& map : decoding.maps) std::fill(map.begin(), map.end(), 0);

    long long best_total = -1;
    StandardSearchResult best;
    std::vector<int> candidate(words);
    while (true) {
        long long total = best_encoding_for_decoding(decoding, letters, params, candidate);
        if (total > best_total) {
            best_total = total;
            best.encoding = EncodingStrategy{params, candidate};
            best.decoding = decoding;
        }
        int y = params.n - 1;
        int m = params.d - 1;
        while (y >= 0) {
            if (++decoding.maps[y][m] < params.d) break;
            decoding.maps[y][m] = 0;
            if (--m < 0) {
                m = params.d - 1;
                --y;
            }
        }
        if (y < 0) break;
    }
    best.value = Rational(BigInt(best_total), denom);
    return best;
}

void BinaryDecodingTable::validate(const TaskParams& task) const {
    if (params.d != task.d || params.n != task.n)
        throw DimensionMismatch("binary decoding built for different task parameters");
    if (guess.size() != static_cast<std::size_t>(task.d) * task.n * task.d)
        throw DimensionMismatch("binary decoding table has wrong size");
    for (std::uint8_t g : guess)
        if (g > 1) throw DimensionMismatch("binary guess outside {0,1}");
}

BinaryDecodingTable BinaryDecodingTable::all_no(const TaskParams& params) {
    params.validate();
    BinaryDecodingTable dec;
    dec.params = params;
    dec.guess.assign(static_cast<std::size_t>(params.d) * params.n * params.d, 1);
    dec.message_used.assign(static_cast<std::size_t>(params.d), 1);
    return dec;
}

BinaryDecodingTable best_response_binary_decoding(const EncodingStrategy& encoding,
                                                  const PayoffConfig& cfg,
                                                  const TaskParams& params) {
    encoding.validate();
    if (encoding.params.d != params.d || encoding.params.n != params.n || cfg.d != params.d)
        throw DimensionMismatch("encoding/config/task parameters disagree");

    std::vector<int> letters = letter_table(params);
    MessageCounts mc = message_counts(encoding, letters, params);
    const BigInt p = numerator(cfg.t_yes);
    const BigInt q = denominator(cfg.t_yes);

    BinaryDecodingTable dec;
    dec.params = params;
    dec.guess.assign(mc.cnt.size(), 1);
    dec.message_used.assign(static_cast<std::size_t>(params.d), 0);
    for (int m = 0; m < params.d; ++m) {
        if (mc.tot[m] == 0) continue; // unreachable message: keep G = 1
        dec.message_used[m] = 1;
        for (int y = 0; y < params.n; ++y) {
            for (int k = 0; k < params.d; ++k) {
                std::size_t idx = (static_cast<std::size_t>(m) * params.n + y) * params.d + k;
                long long c = mc.cnt[idx];
                // t_yes * p_k >= 1 - p_k, cleared of the tot denominator
                if (p * c >= q * (mc.tot[m] - c)) dec.guess[idx] = 0;
            }
        }
    }
    return dec;
}

Rational evaluate_binary_strategy(const EncodingStrategy& encoding,
                                  const BinaryDecodingTable& decoding, const PayoffConfig& cfg,
                                  const TaskParams& params) {
    encoding.validate();
    decoding.validate(params);
    if (encoding.params.d != params.d || encoding.params.n != params.n || cfg.d != params.d)
        throw DimensionMismatch("encoding/config/task parameters disagree");

    std::vector<int> letters = letter_table(params);
    MessageCounts mc = message_counts(encoding, letters, params);
    const BigInt p = numerator(cfg.t_yes);
    const BigInt q = denominator(cfg.t_yes);

    BigInt scaled = 0; // q * (raw payoff sum)
    for (int m = 0; m < params.d; ++m) {
        for (int y = 0; y < params.n; ++y) {
            for (int k = 0; k < params.d; ++k) {
                std::size_t idx = (static_cast<std::size_t>(m) * params.n + y) * params.d + k;
                long long c = mc.cnt[idx];
                if (decoding.g(m, y, k) == 0)
                    scaled += p * c;
                else
                    scaled += q * (mc.tot[m] - c);
            }
        }
    }
    BigInt denom = BigInt(params.n) * ipow(params.d, static_cast<unsigned>(params.n)) *
                   (p + q * (params.d - 1));
    return Rational(scaled, denom);
}

BinarySearchResult brute_force_binary(const TaskParams& params, const PayoffConfig& cfg) {
    if (cfg.d != params.d) throw DimensionMismatch("config dimension disagrees with task");
    check_encoding_space(params);
    std::size_t words = word_count(params);
    std::vector<int> letters = letter_table(params);
    const BigInt p = numerator(cfg.t_yes);
    const BigInt q = denominator(cfg.t_yes);

    EncodingStrategy encoding{params, std::vector<int>(words, 0)};
    std::vector<long long> cnt(static_cast<std::size_t>(params.d) * params.n * params.d);
    std::vector<long long> tot(static_cast<std::size_t>(params.d));

    BigInt best_scaled = -1;
    std::vector<int> best_table;
    while (true) {
        std::fill(cnt.begin(), cnt.end(), 0);
        std::fill(tot.begin(), tot.end(), 0);
        for (std::size_t w = 0; w < words; ++w) {
            int m = encoding.table[w];
            ++tot[m];
            for (int y = 0; y < params.n; ++y)
                ++cnt[(static_cast<std::size_t>(m) * params.n + y) * params.d +
                      letters[w * params.n + y]];
        }
        // Best response scores each (m, y, k) independently.
        BigInt scaled = 0;
        for (int m = 0; m < params.d; ++m) {
            if (tot[m] == 0) continue;
            for (int y = 0; y < params.n; ++y) {
                for (int k = 0; k < params.d; ++k) {
                    long long c =
                        cnt[(static_cast<std::size_t>(m) * params.n + y) * params.d + k];
                    BigInt yes = p * c;
                    BigInt no = q * (tot[m] - c);
                    scaled += yes >= no ? yes : no;
                }
            }
        }
        if (scaled > best_scaled) { // strict: keeps the lexicographically smallest argmax
            best_scaled = scaled;
            best_table = encoding.table;
        }
        // Odometer in lexicographic order, last word fastest.
        int pos = static_cast<int>(words) - 1;
        while (pos >= 0 && ++encoding.table[pos] == params.d) encoding.table[pos--] = 0;
        if (pos < 0) break;
    }

    BigInt denom = BigInt(params.n) * ipow(params.d, static_cast<unsigned>(params.n)) *
                   (p + q * (params.d - 1));
    return BinarySearchResult{Rational(best_scaled, denom),
                              EncodingStrategy{params, std::move(best_table)}};
}

double information_causality_lhs(const EncodingStrategy& encoding, const TaskParams& params) {
    encoding.validate();
    if (encoding.params.d != params.d || encoding.params.n != params.n)
        throw DimensionMismatch("encoding built for different task parameters");

    std::vector<int> letters = letter_table(params);
    MessageCounts mc = message_counts(encoding, letters, params);
    double words = static_cast<double>(encoding.table.size());

    double conditional = 0.0; // sum_i sum_m p(m) H(a_i | m)
    for (int m = 0; m < params.d; ++m) {
        if (mc.tot[m] == 0) continue;
        double pm = static_cast<double>(mc.tot[m]) / words;
        for (int y = 0; y < params.n; ++y) {
            double h = 0.0;
            for (int k = 0; k < params.d; ++k) {
                long long c = mc.cnt[(static_cast<std::size_t>(m) * params.n + y) * params.d + k];
                if (c == 0) continue;
                double pk = static_cast<double>(c) / static_cast<double>(mc.tot[m]);
                h -= pk * std::log2(pk);
            }
            conditional += pm * h;
        }
    }
    return params.n * std::log2(static_cast<double>(params.d)) - conditional;
}

} // namespace brac
