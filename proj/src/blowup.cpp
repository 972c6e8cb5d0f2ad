#include "swave/blowup.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace swave {

namespace {

void check_exponent(double p)
{
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("blow-up oracle requires p > 1");
}

} // namespace

double oracle_t0(double M, double eps, double p)
{
    check_exponent(p);
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("blow-up oracle requires eps > 0");
    if (M == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::pow(std::abs(M) * eps, 1.0 - p) / (p - 1.0);
}

double oracle_U(double M, double eps, double p, double t)
{
    const double t0 = oracle_t0(M, eps, p);
    if (!(t >= 0.0) || !(t < t0))
        throw std::domain_error("oracle_U: t must lie in [0, t0)");
    if (M == 0.0)
        return 0.0;
    const double base = std::pow(std::abs(M) * eps, 1.0 - p) - (p - 1.0) * t;
    const double U = std::pow(base, -1.0 / (p - 1.0));
    return M > 0.0 ? U : -U;
}

BlowupEstimate estimate_blowup_time(std::span<const double> t, std::span<const double> amp, double p)
{
    check_exponent(p);
    if (t.size() != amp.size())
        throw std::invalid_argument("estimate_blowup_time: t and amp differ in length");
    if (amp.empty())
        throw EstimationFailure("empty trace");

    const double floor_amp = 10.0 * std::abs(amp[0]);
    std::size_t first = amp.size();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (std::abs(amp[i]) >= floor_amp) {
            first = i;
            break;
        }
    }
    std::size_t last = first;
    while (last < amp.size() && std::isfinite(amp[last]))
        ++last;
    const std::size_t n = last - first;
    if (first == amp.size() || n < 3)
        throw EstimationFailure("tail above 10x the initial amplitude has fewer than 3 points");
    for (std::size_t i = first + 1; i < last; ++i) {
        if (!(std::abs(amp[i]) > std::abs(amp[i - 1])))
            throw EstimationFailure("amplitude tail is not strictly increasing at t=" +
                                    std::to_string(t[i]));
    }

    // Centred sums keep the normal equations well conditioned.
    double tm = 0.0, ym = 0.0;
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = std::pow(std::abs(amp[first + i]), 1.0 - p);
        tm += t[first + i];
        ym += y[i];
    }
    tm /= static_cast<double>(n);
    ym /= static_cast<double>(n);
    double stt = 0.0, sty = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = t[first + i] - tm;
        stt += dt * dt;
        sty += dt * (y[i] - ym);
    }
    if (!(stt > 0.0))
        throw EstimationFailure("degenerate time samples in tail");
    const double slope = sty / stt;
    if (!(slope < 0.0))
        throw EstimationFailure("linearised amplitude does not decrease; no blow-up signal");
    const double intercept = ym - slope * tm;
    return BlowupEstimate{tm - ym / slope, slope, intercept, n};
}

std::vector<CurvePoint> blowup_curve(const InitialData& data, Sign sign, double eps, double p,
                                     int n_samples)
{
    check_exponent(p);
    if (n_samples < 2)
        throw std::invalid_argument("blowup_curve needs at least two samples");
    const double R = data.R();
    const double dx = 2.0 * R / (n_samples - 1);
    const bool odd = n_samples % 2 == 1;
    const int half = (n_samples - 1) / 2;
    std::vector<CurvePoint> out;
    for (int i = 0; i < n_samples; ++i) {
        const double x0 = odd ? (i - half) * dx : -R + i * dx;
        const double M = eval_M(data, sign, x0);
        if (std::abs(M) < kDegenerateAmplitude)
            continue;
        out.push_back(CurvePoint{x0, M, oracle_t0(M, eps, p)});
    }
    return out;
}

} // namespace swave
