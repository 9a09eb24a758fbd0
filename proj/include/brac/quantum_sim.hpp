#pragma once

#include "brac/payoff.hpp"

#include <complex>
#include <vector>

namespace brac {

using Amplitude = std::complex<double>;

struct QuantumState {
    std::vector<Amplitude> amplitudes;

    int dim() const { return static_cast<int>(amplitudes.size()); }
    double norm_squared() const;
    void normalize();
};

// exp(2 pi i power / d), the d-th root of unity.
Amplitude root_of_unity(int d, long long power);

QuantumState basis_vector(int label, int d);

// |k_bar> with amplitudes omega^{j k} / sqrt(d): the Fourier basis.
QuantumState fourier_vector(int label, int d);

// phase_aligned multiplies the Fourier branch by omega^{-a0 a1} so that the
// cross term <a0|branch> = 1/sqrt(d) is real positive, giving every prepared
// state the constant squared norm 2 + 2/sqrt(d). paper_literal keeps the
// branch (1/sqrt(d)) sum_j omega^{j a1} |a1 + j mod d> unmodified, whose
// cross term carries an input-dependent phase; it is normalized numerically
// and kept for comparison runs.
enum class StateConvention {
    phase_aligned,
    paper_literal,
};

// |a0> + (phase) |a1_bar>, before normalization.
QuantumState prepare_state_raw(int a0, int a1, int d,
                               StateConvention convention = StateConvention::phase_aligned);

// Unit-norm encoded state for Alice's input (a0, a1).
QuantumState prepare_state(int a0, int a1, int d,
                           StateConvention convention = StateConvention::phase_aligned);

// Binary projective measurement {|axis><axis|, 1 - |axis><axis|}; the
// projector side is the outcome G = 0.
struct ProjectiveBinaryMeasurement {
    QuantumState axis;
};

// y = 0 tests in the computational basis, y = 1 in the Fourier basis.
ProjectiveBinaryMeasurement measurement(int y, int k, int d);

// |<axis|state>|^2: probability of G = 0.
double born_probability(const QuantumState& state, const ProjectiveBinaryMeasurement& meas);

// Average over (a0, a1, y) of the correct-answer probability; equals
// 1/2 + 1/(2 sqrt(d)) for the phase-aligned protocol.
double quantum_guess_probability(int d, StateConvention convention = StateConvention::phase_aligned);

// Full average of the binary payoff over (a0, a1, y, k), normalized by
// 2 d^2 T_d; matches binary_quantum_n2 for the phase-aligned protocol.
double simulate_binary_payoff(int d, const PayoffConfig& cfg,
                              StateConvention convention = StateConvention::phase_aligned);

} // namespace brac
