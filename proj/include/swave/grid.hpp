#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace swave {

/// Uniform characteristic lattice with dx = dt = h on [0, T] x [-X, X].
///
/// Nodes are addressed by a signed spatial index k (x_k = k h, symmetric
/// about x = 0) and a level n (t_n = n h). Level n stores the window
/// |k| <= window(n) = n + r + 1 with r = floor(R / h): the light cone
/// |x| <= t + R plus one guard node on each side, which lies strictly
/// outside the cone. Cone-supported functions are therefore zero on every
/// guard node, and nodes outside the window are structurally zero.
class CharGrid {
public:
    /// Throws std::invalid_argument unless h > 0, T >= h, R > 0.
    CharGrid(double h, double T, double R);

    double h() const { return h_; }
    double R() const { return R_; }
    /// Final time t_{levels()-1}; T rounded up to a whole number of steps.
    double T() const { return static_cast<double>(steps_) * h_; }
    long steps() const { return steps_; }
    long levels() const { return steps_ + 1; }
    /// Half-width of the full lattice in nodes; X_extent = half_nodes() * h >= T + R.
    long half_nodes() const { return steps_ + r_ + 1; }
    double x_extent() const { return static_cast<double>(half_nodes()) * h_; }
    /// Number of nodes per full level (odd).
    long nodes_per_level() const { return 2 * half_nodes() + 1; }

    long window(long n) const { return n + r_ + 1; }
    long row_size(long n) const { return 2 * window(n) + 1; }
    /// Offset of level n in window-packed storage.
    std::size_t level_offset(long n) const
    {
        return static_cast<std::size_t>(n * (2 * r_ + 3) + n * (n - 1));
    }
    std::size_t total_nodes() const { return level_offset(levels()); }

    double x(long k) const { return static_cast<double>(k) * h_; }
    double t(long n) const { return static_cast<double>(n) * h_; }
    /// Full-lattice column index i = k + half_nodes(), x_i = -X_extent + i h.
    long column(long k) const { return k + half_nodes(); }
    bool in_cone(long k, long n) const;

    bool operator==(const CharGrid& o) const
    {
        return h_ == o.h_ && R_ == o.R_ && steps_ == o.steps_ && r_ == o.r_;
    }

private:
    double h_;
    double R_;
    long steps_;
    long r_;
};

/// Real-valued samples on the window nodes of a CharGrid.
class GridFn {
public:
    explicit GridFn(const CharGrid& grid, double fill = 0.0);

    const CharGrid& grid() const { return grid_; }

    /// Value at (k, n); zero outside the stored window.
    double operator()(long k, long n) const
    {
        const long K = grid_.window(n);
        if (k < -K || k > K)
            return 0.0;
        return data_[grid_.level_offset(n) + static_cast<std::size_t>(k + K)];
    }
    /// Mutable access; (k, n) must lie inside the window.
    double& at(long k, long n);

    std::span<double> row(long n)
    {
        return {data_.data() + grid_.level_offset(n), static_cast<std::size_t>(grid_.row_size(n))};
    }
    std::span<const double> row(long n) const
    {
        return {data_.data() + grid_.level_offset(n), static_cast<std::size_t>(grid_.row_size(n))};
    }

    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }

    double sup_norm() const;

    /// Fill with fn(x, t) at every stored node.
    template <class Fn>
    void fill(Fn&& fn)
    {
        for (long n = 0; n < grid_.levels(); ++n) {
            const long K = grid_.window(n);
            auto r = row(n);
            for (long k = -K; k <= K; ++k)
                r[static_cast<std::size_t>(k + K)] = fn(grid_.x(k), grid_.t(n));
        }
    }

private:
    CharGrid grid_;
    std::vector<double> data_;
};

/// Read row[k + K] with k clamped to [-K, K]. Out-of-window characteristic
/// reads replicate the guard node, which is zero for cone-supported inputs.
inline double clamped(std::span<const double> row, long K, long k)
{
    if (k < -K)
        k = -K;
    else if (k > K)
        k = K;
    return row[static_cast<std::size_t>(k + K)];
}

} // namespace swave
