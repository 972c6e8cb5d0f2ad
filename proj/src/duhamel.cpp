#include "swave/duhamel.hpp"

#include <algorithm>
#include <stdexcept>

namespace swave {

TrapezoidSweep::TrapezoidSweep(const CharGrid& grid) : grid_(grid)
{
    const auto cap = static_cast<std::size_t>(grid.row_size(grid.steps()));
    p_.reserve(cap);
    q_.reserve(cap);
    u_.reserve(cap);
    p_next_.reserve(cap);
    q_next_.reserve(cap);
}

void TrapezoidSweep::start(std::span<const double> u0)
{
    const auto size = static_cast<std::size_t>(grid_.row_size(0));
    if (u0.size() != size)
        throw std::invalid_argument("TrapezoidSweep::start: row size mismatch");
    level_ = 0;
    p_.assign(size, 0.0);
    q_.assign(size, 0.0);
    u_.assign(u0.begin(), u0.end());
}

void TrapezoidSweep::advance(std::span<const double> u_next)
{
    if (level_ < 0 || level_ >= grid_.steps())
        throw std::logic_error("TrapezoidSweep::advance past the final level");
    const long K = grid_.window(level_);
    const long Kn = grid_.window(level_ + 1);
    if (u_next.size() != static_cast<std::size_t>(2 * Kn + 1))
        throw std::invalid_argument("TrapezoidSweep::advance: row size mismatch");
    const double half_h = 0.5 * grid_.h();

    p_next_.resize(u_next.size());
    q_next_.resize(u_next.size());
    for (long k = -Kn; k <= Kn; ++k) {
        const auto j = static_cast<std::size_t>(k + Kn);
        const double un = u_next[j];
        p_next_[j] = clamped(p_, K, k + 1) + half_h * (clamped(u_, K, k + 1) + un);
        q_next_[j] = clamped(q_, K, k - 1) + half_h * (clamped(u_, K, k - 1) + un);
    }
    p_.swap(p_next_);
    q_.swap(q_next_);
    u_.assign(u_next.begin(), u_next.end());
    ++level_;
}

DiamondSweep::DiamondSweep(const CharGrid& grid) : grid_(grid)
{
    const auto cap = static_cast<std::size_t>(grid.row_size(grid.steps()));
    w_prev_.reserve(cap);
    w_.reserve(cap);
    w_next_.reserve(cap);
}

void DiamondSweep::start()
{
    level_ = 0;
    w_prev_.clear();
    w_.assign(static_cast<std::size_t>(grid_.row_size(0)), 0.0);
}

void DiamondSweep::advance(std::span<const double> u_current)
{
    if (level_ < 0 || level_ >= grid_.steps())
        throw std::logic_error("DiamondSweep::advance past the final level");
    const long K = grid_.window(level_);
    const long Kn = grid_.window(level_ + 1);
    if (u_current.size() != static_cast<std::size_t>(2 * K + 1))
        throw std::invalid_argument("DiamondSweep::advance: row size mismatch");
    const double h2 = grid_.h() * grid_.h();

    w_next_.resize(static_cast<std::size_t>(2 * Kn + 1));
    if (level_ == 0) {
        for (long k = -Kn; k <= Kn; ++k)
            w_next_[static_cast<std::size_t>(k + Kn)] = 0.5 * h2 * clamped(u_current, K, k);
    } else {
        const long Kp = grid_.window(level_ - 1);
        for (long k = -Kn; k <= Kn; ++k) {
            const double sides = clamped(w_, K, k + 1) + clamped(w_, K, k - 1);
            w_next_[static_cast<std::size_t>(k + Kn)] =
                sides - clamped(w_prev_, Kp, k) + h2 * clamped(u_current, K, k);
        }
    }
    w_prev_.swap(w_);
    w_.swap(w_next_);
    ++level_;
}

namespace {

enum class Combine { P, Q, Sum, Diff };

GridFn characteristic_integral(const GridFn& U, Combine mode)
{
    const CharGrid& grid = U.grid();
    GridFn out(grid);
    TrapezoidSweep sweep(grid);
    for (long n = 0; n < grid.levels(); ++n) {
        if (n == 0)
            sweep.start(U.row(0));
        else
            sweep.advance(U.row(n));
        auto P = sweep.P();
        auto Q = sweep.Q();
        auto dst = out.row(n);
        for (std::size_t j = 0; j < dst.size(); ++j) {
            switch (mode) {
            case Combine::P:
                dst[j] = P[j];
                break;
            case Combine::Q:
                dst[j] = Q[j];
                break;
            case Combine::Sum:
                dst[j] = 0.5 * (P[j] + Q[j]);
                break;
            case Combine::Diff:
                dst[j] = 0.5 * (P[j] - Q[j]);
                break;
            }
        }
    }
    return out;
}

} // namespace

GridFn op_P(const GridFn& U) { return characteristic_integral(U, Combine::P); }
GridFn op_Q(const GridFn& U) { return characteristic_integral(U, Combine::Q); }
GridFn op_Lprime(const GridFn& U) { return characteristic_integral(U, Combine::Sum); }
GridFn op_Lbar(const GridFn& U) { return characteristic_integral(U, Combine::Diff); }

GridFn op_L(const GridFn& U)
{
    const CharGrid& grid = U.grid();
    GridFn out(grid);
    DiamondSweep sweep(grid);
    sweep.start();
    for (long n = 0; n + 1 < grid.levels(); ++n) {
        sweep.advance(U.row(n));
        auto W = sweep.W();
        std::copy(W.begin(), W.end(), out.row(n + 1).begin());
    }
    return out;
}

} // namespace swave
