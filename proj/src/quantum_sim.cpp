#include "brac/quantum_sim.hpp"

#include "brac/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace brac {

namespace {

void check_label(int label, int d, const char* what) {
    if (d < 2) throw InvalidParams("dimension d must be >= 2, got " + std::to_string(d));
    if (label < 0 || label >= d)
        throw InvalidParams(std::string(what) + " " + std::to_string(label) +
                            " outside {0, ..., " + std::to_string(d - 1) + "}");
}

} // namespace

double QuantumState::norm_squared() const {
    double total = 0.0;
    for (const Amplitude& a : amplitudes) total += std::norm(a);
    return total;
}

void QuantumState::normalize() {
    double n = std::sqrt(norm_squared());
    if (n == 0.0) throw DomainError("cannot normalize the zero vector");
    for (Amplitude& a : amplitudes) a /= n;
}

Amplitude root_of_unity(int d, long long power) {
    long long r = power % d;
    if (r < 0) r += d;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / d;
    return Amplitude{std::cos(angle), std::sin(angle)};
}

QuantumState basis_vector(int label, int d) {
    check_label(label, d, "basis label");
    QuantumState state{std::vector<Amplitude>(static_cast<std::size_t>(d))};
    state.amplitudes[label] = 1.0;
    return state;
}

QuantumState fourier_vector(int label, int d) {
    check_label(label, d, "fourier label");
    QuantumState state{std::vector<Amplitude>(static_cast<std::size_t>(d))};
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        state.amplitudes[j] = root_of_unity(d, static_cast<long long>(j) * label) * scale;
    return state;
}

QuantumState prepare_state_raw(int a0, int a1, int d, StateConvention convention) {
    check_label(a0, d, "input a0");
    check_label(a1, d, "input a1");
    QuantumState state{std::vector<Amplitude>(static_cast<std::size_t>(d))};
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    if (convention == StateConvention::phase_aligned) {
        Amplitude phase = root_of_unity(d, -static_cast<long long>(a0) * a1);
        for (int j = 0; j < d; ++j)
            state.amplitudes[j] =
                phase * root_of_unity(d, static_cast<long long>(j) * a1) * scale;
    } else {
        for (int j = 0; j < d; ++j)
            state.amplitudes[(a1 + j) % d] +=
                root_of_unity(d, static_cast<long long>(j) * a1) * scale;
    }
    state.amplitudes[a0] += 1.0;
    return state;
}

QuantumState prepare_state(int a0, int a1, int d, StateConvention convention) {
    QuantumState state = prepare_state_raw(a0, a1, d, convention);
    state.normalize();
    return state;
}

ProjectiveBinaryMeasurement measurement(int y, int k, int d) {
    if (y != 0 && y != 1) throw InvalidParams("measurement input y must be 0 or 1");
    check_label(k, d, "measurement label k");
    return ProjectiveBinaryMeasurement{y == 0 ? basis_vector(k, d) : fourier_vector(k, d)};
}

double born_probability(const QuantumState& state, const ProjectiveBinaryMeasurement& meas) {
    if (state.dim() != meas.axis.dim())
        throw DimensionMismatch("state dimension " + std::to_string(state.dim()) +
                                " does not match measurement dimension " +
                                std::to_string(meas.axis.dim()));
    Amplitude overlap = 0.0;
    for (int j = 0; j < state.dim(); ++j)
        overlap += std::conj(meas.axis.amplitudes[j]) * state.amplitudes[j];
    return std::norm(overlap);
}

double quantum_guess_probability(int d, StateConvention convention) {
    if (d < 2) throw InvalidParams("dimension d must be >= 2");
    double total = 0.0;
    for (int a0 = 0; a0 < d; ++a0) {
        for (int a1 = 0; a1 < d; ++a1) {
            QuantumState state = prepare_state(a0, a1, d, convention);
            total += born_probability(state, measurement(0, a0, d));
            total += born_probability(state, measurement(1, a1, d));
        }
    }
    return total / (2.0 * d * d);
}

double simulate_binary_payoff(int d, const PayoffConfig& cfg, StateConvention convention) {
    if (cfg.d != d) throw DimensionMismatch("payoff config dimension disagrees");
    double t_yes = cfg.t_yes_real();
    double total = 0.0;
    for (int a0 = 0; a0 < d; ++a0) {
        for (int a1 = 0; a1 < d; ++a1) {
            QuantumState state = prepare_state(a0, a1, d, convention);
            for (int y = 0; y < 2; ++y) {
                int correct = y == 0 ? a0 : a1;
                for (int k = 0; k < d; ++k) {
                    double p_yes = born_probability(state, measurement(y, k, d));
                    total += k == correct ? t_yes * p_yes : 1.0 - p_yes;
                }
            }
        }
    }
    return total / (2.0 * d * d * cfg.t_d_real());
}

} // namespace brac
