#pragma once

#include "swave/initial_data.hpp"

namespace swave {

/// Closed-form d'Alembert solution u0 of the free wave equation with data
/// (f, g) and its first and second derivatives. Evaluators are unscaled;
/// eps is stored for the scaled convenience accessors only.
///
/// Sums are grouped so that even data give exactly even u0_t, u0_tt and
/// exactly odd u0_x, u0_tx under x -> -x.
class FreeWave {
public:
    explicit FreeWave(InitialData data, double eps = 1.0) : data_(data), eps_(eps) {}

    const InitialData& data() const { return data_; }
    double eps() const { return eps_; }

    /// ½{f(x+t)+f(x-t)} + ½{G(x+t)-G(x-t)}
    double u0(double x, double t) const;
    /// ½{f'(x+t)-f'(x-t)+g(x+t)+g(x-t)}
    double u0_t(double x, double t) const;
    /// ½{f'(x+t)+f'(x-t)+g(x+t)-g(x-t)}
    double u0_x(double x, double t) const;
    /// ½{f''(x+t)-f''(x-t)+g'(x+t)+g'(x-t)}
    double u0_tx(double x, double t) const;
    /// ½{f''(x+t)+f''(x-t)+g'(x+t)-g'(x-t)}
    double u0_xx(double x, double t) const;
    double u0_tt(double x, double t) const;

    double eps_u0(double x, double t) const { return eps_ * u0(x, t); }
    double eps_u0_t(double x, double t) const { return eps_ * u0_t(x, t); }
    double eps_u0_x(double x, double t) const { return eps_ * u0_x(x, t); }

private:
    InitialData data_;
    double eps_;
};

} // namespace swave
