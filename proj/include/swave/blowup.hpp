#pragma once

#include "swave/initial_data.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace swave {

/// Blow-up time of U' = |U|^{p-1} U, U(0) = M eps:
///
///   t0 = (|M| eps)^{1-p} / (p - 1).
///
/// Returns +inf for M = 0 (no blow-up along that characteristic). A negative
/// M gives the same t0 by the symmetry u -> -u. Throws std::invalid_argument
/// for p <= 1 or eps <= 0.
double oracle_t0(double M, double eps, double p);

/// Closed-form U(t) = sign(M) {(|M| eps)^{1-p} - (p-1) t}^{-1/(p-1)} for 0 <= t < t0.
/// Throws std::domain_error outside that range.
double oracle_U(double M, double eps, double p, double t);

class EstimationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BlowupEstimate {
    double t0;
    double slope;      ///< fitted dy/dt of y = amp^{1-p}; exactly -(p-1) for the closed form
    double intercept;
    std::size_t points;
};

/// Fits y_n = amp_n^{1-p} against t_n by least squares over the tail where
/// amp >= 10 amp_0 and returns the zero crossing of the fitted line.
/// Throws EstimationFailure when the tail is too short, not strictly
/// increasing, or the fitted slope is not negative.
BlowupEstimate estimate_blowup_time(std::span<const double> t, std::span<const double> amp, double p);

struct CurvePoint {
    double x0;
    double M;
    double t0;
};

/// (x0, M(x0), t0(x0)) for n_samples equally spaced x0 in [-R, R]. Points
/// with |M| below kDegenerateAmplitude (infinite t0) are omitted.
std::vector<CurvePoint> blowup_curve(const InitialData& data, Sign sign, double eps, double p,
                                     int n_samples);

} // namespace swave
