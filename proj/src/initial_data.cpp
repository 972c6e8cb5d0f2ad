#include "swave/initial_data.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace swave {

namespace {

// Bump profiles in the scaled variable s = x/R, z = 1 - s^2. The odd
// derivatives are written as s * (even polynomial) so that parity holds
// bit-for-bit under x -> -x.

double cubic_bump(double s)
{
    const double z = 1.0 - s * s;
    return z * z * z;
}

double cubic_bump_d1(double s)
{
    const double z = 1.0 - s * s;
    return -6.0 * s * (z * z);
}

double cubic_bump_d2(double s)
{
    const double z = 1.0 - s * s;
    return -6.0 * z * (z - 4.0 * s * s);
}

double quad_bump(double s)
{
    const double z = 1.0 - s * s;
    return z * z;
}

double quad_bump_d1(double s)
{
    const double z = 1.0 - s * s;
    return -4.0 * s * z;
}

// int_{-1}^{s} (1 - r^2)^2 dr
double quad_bump_integral(double s)
{
    const double s2 = s * s;
    return s * (1.0 - s2 * (2.0 / 3.0) + s2 * s2 * 0.2) + 8.0 / 15.0;
}

} // namespace

InitialData make_bump_data(double amp_f, double amp_g, double R)
{
    if (!(R >= 1.0) || !std::isfinite(R))
        throw std::invalid_argument("support radius R must satisfy R >= 1");
    if (!std::isfinite(amp_f) || !std::isfinite(amp_g))
        throw std::invalid_argument("bump amplitudes must be finite");
    InitialData d;
    d.family_ = DataFamily::Bump;
    d.amp_f_ = amp_f;
    d.amp_g_ = amp_g;
    d.radius_ = R;
    return d;
}

InitialData make_traveling_data(double amp_f, double R, Sign direction)
{
    InitialData d = make_bump_data(amp_f, 0.0, R);
    d.family_ = DataFamily::Traveling;
    d.direction_ = direction;
    return d;
}

double InitialData::f(double x) const
{
    const double s = x / radius_;
    if (!(std::abs(s) < 1.0))
        return 0.0;
    return amp_f_ * cubic_bump(s);
}

double InitialData::df(double x) const
{
    const double s = x / radius_;
    if (!(std::abs(s) < 1.0))
        return 0.0;
    return amp_f_ * cubic_bump_d1(s) / radius_;
}

double InitialData::d2f(double x) const
{
    const double s = x / radius_;
    if (!(std::abs(s) < 1.0))
        return 0.0;
    return amp_f_ * cubic_bump_d2(s) / (radius_ * radius_);
}

double InitialData::g(double x) const
{
    if (family_ == DataFamily::Traveling)
        return -sign_value(direction_) * df(x);
    const double s = x / radius_;
    if (!(std::abs(s) < 1.0))
        return 0.0;
    return amp_g_ * quad_bump(s);
}

double InitialData::dg(double x) const
{
    if (family_ == DataFamily::Traveling)
        return -sign_value(direction_) * d2f(x);
    const double s = x / radius_;
    if (!(std::abs(s) < 1.0))
        return 0.0;
    return amp_g_ * quad_bump_d1(s) / radius_;
}

double InitialData::G(double x) const
{
    if (family_ == DataFamily::Traveling)
        return -sign_value(direction_) * f(x);
    const double s = x / radius_;
    if (s <= -1.0)
        return 0.0;
    if (s >= 1.0)
        return amp_g_ * radius_ * (16.0 / 15.0);
    return amp_g_ * radius_ * quad_bump_integral(s);
}

std::string InitialData::describe() const
{
    std::ostringstream os;
    if (family_ == DataFamily::Bump)
        os << "bump(amp_f=" << amp_f_ << ", amp_g=" << amp_g_ << ", R=" << radius_ << ")";
    else
        os << "traveling(amp_f=" << amp_f_ << ", R=" << radius_
           << ", direction=" << (direction_ == Sign::Plus ? '+' : '-') << ")";
    return os.str();
}

double eval_M(const InitialData& data, Sign sign, double x0)
{
    return sign_value(sign) * data.df(x0) + data.g(x0);
}

MStar eval_Mstar(const InitialData& data, Sign sign, int samples)
{
    if (samples < 2)
        throw std::invalid_argument("eval_Mstar needs at least two samples");
    const double R = data.R();
    const double dx = 2.0 * R / (samples - 1);
    MStar best;
    // Odd counts use the symmetric points k*dx so x = 0 is sampled exactly.
    // Strict '>' keeps the smallest maximiser.
    const bool odd = samples % 2 == 1;
    const long half = (samples - 1) / 2;
    for (long i = 0; i < samples; ++i) {
        const double x = odd ? static_cast<double>(i - half) * dx : -R + static_cast<double>(i) * dx;
        const double m = std::abs(eval_M(data, sign, x));
        if (m > best.value) {
            best.value = m;
            best.x = x;
        }
    }
    if (best.value < kDegenerateAmplitude)
        return MStar{0.0, 0.0, true};
    return best;
}

} // namespace swave
