#pragma once

#include "swave/grid.hpp"

#include <span>
#include <vector>

namespace swave {

/// Level-by-level evaluation of the characteristic integrals
///
///   P(x,t) = int_0^t U(x+t-s, s) ds,   Q(x,t) = int_0^t U(x-t+s, s) ds
///
/// by the trapezoid rule along the lattice characteristics:
///
///   P(k, n+1) = P(k+1, n) + h/2 [U(k+1, n) + U(k, n+1)]
///   Q(k, n+1) = Q(k-1, n) + h/2 [U(k-1, n) + U(k, n+1)]
///
/// Only the previous level is kept, so callers can stream U one row at a
/// time (the Picard iteration does this in place).
class TrapezoidSweep {
public:
    explicit TrapezoidSweep(const CharGrid& grid);

    /// Level 0: P = Q = 0. `u0` is the level-0 row of U.
    void start(std::span<const double> u0);
    /// Advance to the next level given that level's row of U.
    void advance(std::span<const double> u_next);

    long level() const { return level_; }
    std::span<const double> P() const { return p_; }
    std::span<const double> Q() const { return q_; }

private:
    CharGrid grid_;
    long level_ = -1;
    std::vector<double> p_, q_, u_;
    std::vector<double> p_next_, q_next_;
};

/// Diamond recurrence for the Duhamel term
///
///   L(U)(x,t) = ½ int_0^t ds int_{x-t+s}^{x+t-s} U(y,s) dy,
///
/// W(k, n+1) = W(k+1, n) + W(k-1, n) - W(k, n-1) + h^2 U(k, n), seeded with
/// W(., 0) = 0 and W(., 1) = h^2/2 U(., 0). Second order in h.
class DiamondSweep {
public:
    explicit DiamondSweep(const CharGrid& grid);

    /// Level-0 row W = 0.
    void start();
    /// Consume the row of U at the current level and advance W by one level.
    void advance(std::span<const double> u_current);

    long level() const { return level_; }
    std::span<const double> W() const { return w_; }

private:
    CharGrid grid_;
    long level_ = -1;
    std::vector<double> w_prev_, w_, w_next_;
};

GridFn op_P(const GridFn& U);
GridFn op_Q(const GridFn& U);
/// L'(U) = (P + Q) / 2
GridFn op_Lprime(const GridFn& U);
/// conj(L')(U) = (P - Q) / 2
GridFn op_Lbar(const GridFn& U);
GridFn op_L(const GridFn& U);

} // namespace swave
