#include "swave/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swave {

namespace {

long whole_steps(double T, double h)
{
    const double ratio = T / h;
    const double nearest = std::round(ratio);
    if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio))
        return static_cast<long>(nearest);
    return static_cast<long>(std::ceil(ratio));
}

} // namespace

CharGrid::CharGrid(double h, double T, double R) : h_(h), R_(R)
{
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("grid spacing h must be positive");
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::invalid_argument("support radius must be positive");
    if (!std::isfinite(T) || !(T > 0.0))
        throw std::invalid_argument("final time T must be positive");
    steps_ = whole_steps(T, h);
    if (steps_ < 1)
        throw std::invalid_argument("final time T must span at least one step");
    r_ = static_cast<long>(std::floor(R / h + 1e-9));
    if (x_extent() < this->T() + R_)
        throw std::logic_error("lattice does not cover the light cone");
}

bool CharGrid::in_cone(long k, long n) const
{
    return std::abs(x(k)) <= t(n) + R_;
}

GridFn::GridFn(const CharGrid& grid, double fill) : grid_(grid), data_(grid.total_nodes(), fill) {}

double& GridFn::at(long k, long n)
{
    const long K = grid_.window(n);
    if (n < 0 || n >= grid_.levels() || k < -K || k > K)
        throw std::out_of_range("GridFn::at outside the stored window");
    return data_[grid_.level_offset(n) + static_cast<std::size_t>(k + K)];
}

double GridFn::sup_norm() const
{
    double m = 0.0;
    for (double v : data_)
        m = std::max(m, std::abs(v));
    return m;
}

} // namespace swave
