#include "brac/pcrit_solver.hpp"

#include "brac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

namespace brac {

namespace {

constexpr double kProbTol = 1e-9; // clamp window around the [1/d, 1/x] limits

void check_dimension(int d) {
    if (d < 2) throw InvalidParams("dimension d must be >= 2, got " + std::to_string(d));
}

void check_x(int x, int d) {
    if (x < 1 || x > d - 1)
        throw InvalidIndex("x must lie in [1, d-1], got x=" + std::to_string(x) +
                           " for d=" + std::to_string(d));
}

// Raw inversion of the payoff at fixed x; domain handling is the caller's.
double p_raw(double T, int x, int d, double p_crit) {
    return (T + p_crit * (d * (T - 1.0) - 2.0 * T + x + 1.0)) / x;
}

std::optional<double> p_checked(double T, int x, int d, double p_crit) {
    double p = p_raw(T, x, d, p_crit);
    double lo = 1.0 / d;
    double hi = 1.0 / x;
    if (p < lo - kProbTol || p > hi + kProbTol) return std::nullopt;
    return std::clamp(p, lo, hi);
}

} // namespace

StepDistribution::StepDistribution(int x_, double p_, int d_) : x(x_), p(p_), d(d_) {
    check_dimension(d);
    check_x(x, d);
    if (!(p >= -kProbTol && p <= 1.0 / x + kProbTol))
        throw DomainError("step probability p=" + format_sig(p) + " outside [0, 1/x] for x=" +
                          std::to_string(x));
    p = std::clamp(p, 0.0, 1.0 / x);
}

double entropy_step(const StepDistribution& sd) {
    double xp = sd.x * sd.p;
    double h = 0.0;
    if (sd.p > 0.0) h -= xp * std::log2(sd.p);
    double rest = 1.0 - xp;
    if (rest > 0.0) h -= rest * std::log2(rest / (sd.d - sd.x));
    return h;
}

double payoff_step(const StepDistribution& sd, const PayoffConfig& cfg) {
    if (cfg.d != sd.d) throw DimensionMismatch("payoff config dimension disagrees");
    double t_yes = cfg.t_yes_real();
    return (sd.x * (t_yes * sd.p - (1.0 - sd.p)) + sd.d - 1.0) / cfg.t_d_real();
}

double p_from_T(double T, int x, int d, double p_crit) {
    check_dimension(d);
    check_x(x, d);
    double p = p_raw(T, x, d, p_crit);
    double lo = 1.0 / d;
    double hi = 1.0 / x;
    if (p < lo - kProbTol)
        throw DomainError("p=" + format_sig(p) + " below the lower limit 1/d=" + format_sig(lo) +
                          " at T=" + format_sig(T));
    if (p > hi + kProbTol)
        throw DomainError("p=" + format_sig(p) + " above the upper limit 1/x=" + format_sig(hi) +
                          " at T=" + format_sig(T));
    return std::clamp(p, lo, hi);
}

double t_lower(int d, double p_crit) {
    check_dimension(d);
    double s = static_cast<double>(d - 2) * d * p_crit;
    return (1.0 + s) / (d + s);
}

double t_upper(int d, double p_crit, int i) {
    check_dimension(d);
    check_x(i, d);
    return (1.0 + p_crit * (d - i - 1.0)) / (1.0 + (d - 2.0) * p_crit);
}

std::optional<double> delta_i(double T, int d, double p_crit, int i) {
    check_dimension(d);
    if (i < 2 || i > d - 1)
        throw InvalidIndex("delta index i must lie in [2, d-1], got " + std::to_string(i));
    auto p1 = p_checked(T, 1, d, p_crit);
    auto pi = p_checked(T, i, d, p_crit);
    if (!p1 || !pi) return std::nullopt;
    return entropy_step(StepDistribution(1, *p1, d)) - entropy_step(StepDistribution(i, *pi, d));
}

namespace {

struct ScanOutcome {
    bool positive = true; // no sample at or below the sign guard
    bool any_defined = false;
    double min_delta = std::numeric_limits<double>::infinity();
    double argmin_t = 0.0;
};

// Shared sampling for the public minimum and the scan's sign test; when
// early_exit is set the walk stops at the first non-positive sample.
ScanOutcome scan_delta(int d, double p_crit, int i, int grid_size, bool early_exit) {
    ScanOutcome out;
    double lo = t_lower(d, p_crit);
    double hi = t_upper(d, p_crit, i);
    if (lo >= hi) return out; // empty range, nothing to check

    auto take = [&](double T) {
        auto dv = delta_i(T, d, p_crit, i);
        if (!dv) return false;
        out.any_defined = true;
        if (*dv < out.min_delta) {
            out.min_delta = *dv;
            out.argmin_t = T;
        }
        if (*dv <= kDeltaSignGuard) out.positive = false;
        return !out.positive && early_exit;
    };

    double h = (hi - lo) / (grid_size - 1);
    for (int j = 0; j < grid_size; ++j) {
        double T = j + 1 == grid_size ? hi : lo + h * j;
        if (take(T)) return out;
    }
    if (!out.any_defined) return out;

    double fine = h / kRefineFactor;
    double from = std::max(lo, out.argmin_t - h);
    double to = std::min(hi, out.argmin_t + h);
    for (double T = from; T <= to + fine / 2; T += fine) {
        if (take(std::min(T, to))) return out;
    }
    return out;
}

} // namespace

std::optional<MinDeltaResult> min_delta_over_range(int d, double p_crit, int i, int grid_size) {
    if (grid_size < 3) throw InvalidParams("grid_size must be >= 3");
    ScanOutcome out = scan_delta(d, p_crit, i, grid_size, false);
    if (!out.any_defined) return std::nullopt;
    return MinDeltaResult{out.min_delta, out.argmin_t};
}

PcritResult find_pcrit(int d, double epsilon) {
    if (d < 3) throw InvalidParams("find_pcrit requires d >= 3, got " + std::to_string(d));
    if (!(epsilon > 0.0)) throw InvalidParams("epsilon must be positive");

    int i_max = (d + 1) / 2; // ceil(d/2); entropy symmetry covers larger x
    for (long long step = 1;; ++step) {
        double p_crit = 1.0 / d + epsilon * static_cast<double>(step);
        if (p_crit >= 1.0)
            throw NoSolution("p_crit scan reached 1 without a passing value for d=" +
                             std::to_string(d));
        bool all_positive = true;
        for (int i = 2; i <= i_max && all_positive; ++i) {
            ScanOutcome out = scan_delta(d, p_crit, i, kScanGridSize, true);
            if (out.any_defined && !out.positive) all_positive = false;
        }
        if (all_positive)
            return PcritResult{d, epsilon, p_crit, (1.0 - p_crit) / p_crit};
    }
}

CurveFamily emit_curves(int d, double p_crit, const std::vector<int>& x_values, int samples) {
    check_dimension(d);
    if (samples < 2) throw InvalidParams("samples must be >= 2");
    if (x_values.empty()) throw InvalidParams("x_values must not be empty");

    CurveFamily fam;
    fam.d = d;
    fam.p_crit = p_crit;
    fam.x_values = x_values;
    fam.t0 = t_lower(d, p_crit);
    for (int x : x_values) fam.t1.push_back(t_upper(d, p_crit, x));

    double t_max = *std::max_element(fam.t1.begin(), fam.t1.end());
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(samples) + fam.t1.size());
    for (int j = 0; j < samples; ++j)
        grid.push_back(j + 1 == samples ? t_max
                                        : fam.t0 + (t_max - fam.t0) * j / (samples - 1));
    for (double limit : fam.t1) grid.push_back(limit);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-15; }),
               grid.end());

    for (double T : grid) {
        CurvePoint point;
        point.t = T;
        for (std::size_t c = 0; c < x_values.size(); ++c) {
            int x = x_values[c];
            std::optional<double> p;
            if (T <= fam.t1[c] + 1e-12) p = p_checked(T, x, d, p_crit);
            if (p) {
                point.entropy.push_back(entropy_step(StepDistribution(x, *p, d)));
                point.valid.push_back(true);
            } else {
                point.entropy.push_back(std::numeric_limits<double>::quiet_NaN());
                point.valid.push_back(false);
            }
            point.at_limit.push_back(std::abs(T - fam.t0) < 1e-12 ||
                                     std::abs(T - fam.t1[c]) < 1e-12);
        }
        fam.points.push_back(std::move(point));
    }
    return fam;
}

void write_curves_csv(const CurveFamily& curves, std::ostream& out) {
    out << "T";
    for (int x : curves.x_values) out << ",H_x" << x;
    for (int x : curves.x_values) out << ",limit_x" << x;
    out << "\n";
    for (const CurvePoint& point : curves.points) {
        out << format_sig(point.t);
        for (std::size_t c = 0; c < curves.x_values.size(); ++c) {
            out << ",";
            if (point.valid[c]) out << format_sig(point.entropy[c]);
        }
        for (std::size_t c = 0; c < curves.x_values.size(); ++c)
            out << "," << (point.at_limit[c] ? 1 : 0);
        out << "\n";
    }
}

} // namespace brac
