#pragma once

#include "brac/payoff.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace brac {

// Bob's posterior over the queried dit, reduced to a two-level profile:
// x entries at probability p, the remaining d-x entries uniform on what is
// left. p may drop below 1/d (the mirrored profile (d-x, low) describes the
// same multiset); the solver itself only ever works on p >= 1/d.
struct StepDistribution {
    int x = 1;
    double p = 1.0;
    int d = 2;

    StepDistribution(int x, double p, int d);

    double low() const { return (1.0 - x * p) / (d - x); }
};

// H^x = -x p log2 p - (1 - x p) log2((1 - x p)/(d - x)), with 0 log 0 = 0.
double entropy_step(const StepDistribution& sd);

// T = (x [t_yes p - (1 - p)] + d - 1) / T_d.
double payoff_step(const StepDistribution& sd, const PayoffConfig& cfg);

// Inverts payoff_step at fixed x: p = (T + p_crit [d(T-1) - 2T + x + 1]) / x.
// Throws DomainError when the result leaves [1/d, 1/x]; values within 1e-9
// of a boundary are clamped onto it.
double p_from_T(double T, int x, int d, double p_crit);

// Range of payoffs over which the x = 1 profile is compared against x = i:
// T_0 has the uniform posterior (p = 1/d), T_1^{x=i} has x p = 1.
double t_lower(int d, double p_crit);
double t_upper(int d, double p_crit, int i);

// H^{x=1}(T) - H^{x=i}(T); empty when either profile is out of domain at T.
std::optional<double> delta_i(double T, int d, double p_crit, int i);

struct MinDeltaResult {
    double min_delta = 0.0;
    double argmin_t = 0.0;
};

inline constexpr int kScanGridSize = 1001;
inline constexpr int kRefineFactor = 100;
inline constexpr double kDeltaSignGuard = 1e-12;

// Minimum of delta_i over [T_0, T_1^{x=i}]: both endpoints, a uniform grid,
// then one pass on a kRefineFactor-times finer grid around the best coarse
// point. Out-of-domain samples are skipped. Empty when the range is empty
// or no sample is defined.
std::optional<MinDeltaResult> min_delta_over_range(int d, double p_crit, int i,
                                                   int grid_size = kScanGridSize);

struct PcritResult {
    int d = 0;
    double epsilon = 0.0;
    double p_crit = 0.0;
    double t_yes = 0.0;
};

// Scans p_crit = 1/d + k*epsilon upward until min delta_i > kDeltaSignGuard
// (or is undefined) for every i in {2, ..., ceil(d/2)}; returns the first
// passing value and the matching t_yes = (1 - p_crit)/p_crit.
PcritResult find_pcrit(int d, double epsilon = 1e-5);

struct CurvePoint {
    double t = 0.0;
    std::vector<double> entropy;  // parallel to x_values; NaN when invalid
    std::vector<bool> valid;      // T within [T_0, T_1^{x}] and p in domain
    std::vector<bool> at_limit;   // T sits on T_0 or that x's T_1
};

struct CurveFamily {
    int d = 0;
    double p_crit = 0.0;
    std::vector<int> x_values;
    double t0 = 0.0;
    std::vector<double> t1; // per x
    std::vector<CurvePoint> points;
};

// H-vs-T curve family for plotting: `samples` uniform points across the
// union of the per-x ranges, plus one injected row per range limit.
CurveFamily emit_curves(int d, double p_crit, const std::vector<int>& x_values, int samples);

// CSV: T,H_x<i>...,limit_x<i>... with 12 significant digits; invalid
// entropy cells are left empty, limit flags are 0/1.
void write_curves_csv(const CurveFamily& curves, std::ostream& out);

} // namespace brac
