#include "swave/freewave.hpp"

namespace swave {

double FreeWave::u0(double x, double t) const
{
    const double xp = x + t;
    const double xm = x - t;
    return 0.5 * (data_.f(xp) + data_.f(xm)) + 0.5 * (data_.G(xp) - data_.G(xm));
}

double FreeWave::u0_t(double x, double t) const
{
    const double xp = x + t;
    const double xm = x - t;
    return 0.5 * ((data_.df(xp) - data_.df(xm)) + (data_.g(xp) + data_.g(xm)));
}

double FreeWave::u0_x(double x, double t) const
{
    const double xp = x + t;
    const double xm = x - t;
    return 0.5 * ((data_.df(xp) + data_.df(xm)) + (data_.g(xp) - data_.g(xm)));
}

double FreeWave::u0_tx(double x, double t) const
{
    const double xp = x + t;
    const double xm = x - t;
    return 0.5 * ((data_.d2f(xp) - data_.d2f(xm)) + (data_.dg(xp) + data_.dg(xm)));
}

double FreeWave::u0_xx(double x, double t) const
{
    const double xp = x + t;
    const double xm = x - t;
    return 0.5 * ((data_.d2f(xp) + data_.d2f(xm)) + (data_.dg(xp) - data_.dg(xm)));
}

// Second time derivative of the d'Alembert formula; equals u0_xx identically.
double FreeWave::u0_tt(double x, double t) const
{
    const double xp = x + t;
    const double xm = x - t;
    const double ftt = data_.d2f(xp) + data_.d2f(xm);
    const double gt = data_.dg(xp) - data_.dg(xm);
    return 0.5 * (ftt + gt);
}

} // namespace swave
