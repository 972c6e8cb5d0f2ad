#pragma once

#include "swave/grid.hpp"
#include "swave/initial_data.hpp"
#include "swave/nonlinearity.hpp"

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace swave {

/// Non-finite field value produced by a march step.
class BlowupDetected : public std::runtime_error {
public:
    BlowupDetected(double t, long k);
    double t() const { return t_; }
    long k() const { return k_; }

private:
    double t_;
    long k_;
};

struct TraceRow {
    double t;
    double sup_a;
    double sup_b;
    double sup_u;
};

/// One time level of the Riemann-invariant formulation
///
///   (d_t - d_x) a = F,   (d_t + d_x) b = F,   a = u_t + u_x,  b = u_t - u_x,
///
/// stored on the full lattice row (column index k + half_nodes()). Nodes
/// outside the window of the current level are exactly zero.
class FieldState {
public:
    const CharGrid& grid() const { return grid_; }
    long level() const { return level_; }
    double t() const { return grid_.t(level_); }

    double a(long k) const { return read(a_, k); }
    double b(long k) const { return read(b_, k); }
    double u(long k) const { return read(u_, k); }
    double u_t(long k) const { return 0.5 * (a(k) + b(k)); }
    double u_x(long k) const { return 0.5 * (a(k) - b(k)); }

    std::span<const double> a_row() const { return a_; }
    std::span<const double> b_row() const { return b_; }
    std::span<const double> u_row() const { return u_; }

    /// Per-level sup norms, one row per level reached so far.
    const std::vector<TraceRow>& trace() const { return trace_; }
    /// max(|a|, |b|) over the current level.
    double max_amplitude() const;

    /// Overwrite b(x, 0) (used to probe the decoupling of the special models).
    void set_b(long k, double value);

private:
    friend FieldState init_fields(const InitialData&, double, const CharGrid&);
    friend void step(FieldState&, const NonlinearityParams&);

    explicit FieldState(const CharGrid& grid);
    double read(const std::vector<double>& row, long k) const
    {
        const long i = k + grid_.half_nodes();
        if (i < 0 || i >= static_cast<long>(row.size()))
            return 0.0;
        return row[static_cast<std::size_t>(i)];
    }
    void record_trace();

    CharGrid grid_;
    long level_ = 0;
    std::vector<double> a_, b_, u_;
    std::vector<double> a_next_, b_next_, u_next_, f_;
    std::vector<TraceRow> trace_;
};

/// a(x,0) = eps (g + f')(x), b(x,0) = eps (g - f')(x), u(x,0) = eps f(x).
FieldState init_fields(const InitialData& data, double eps, const CharGrid& grid);

/// One Heun step along the unit-CFL characteristics:
///
///   a*(k) = a(k+1) + h F(k+1),   b*(k) = b(k-1) + h F(k-1),
///   a'(k) = a(k+1) + h/2 [F(k+1) + F(a*, b*)(k)],  likewise b',
///
/// and u advanced by the trapezoid rule on u_t = (a + b)/2.
/// Throws BlowupDetected on a non-finite value.
void step(FieldState& state, const NonlinearityParams& params);

enum class SolveStatus { Completed, ThresholdCrossed, BlowupDetected };

const char* to_string(SolveStatus s);

struct Crossing {
    double t = 0.0;
    long k = 0;
    double x = 0.0;
    /// Foot of the offending characteristic at t = 0: x + t for a, x - t for b.
    double x0 = 0.0;
    bool from_a = true;
};

struct SolveOptions {
    double amp_threshold = 1e6;
    /// Called after init and after every completed step.
    std::function<void(const FieldState&)> observer;
};

struct SolveResult {
    SolveStatus status;
    FieldState state;
    std::optional<Crossing> crossing;
    double t_end() const { return state.t(); }
    const std::vector<TraceRow>& trace() const { return state.trace(); }
};

/// March on CharGrid(h, T, data.R()) until T, a threshold crossing of
/// max(|a|, |b|), or a non-finite value.
SolveResult solve(const InitialData& data, const NonlinearityParams& params, double eps, double T,
                  double h, const SolveOptions& options = {});

/// The amplitude series the blow-up estimator should linearise:
/// sup|a| (special plus), sup|b| (special minus), max of both otherwise.
std::vector<double> amplitude_series(std::span<const TraceRow> trace, Variant variant);

} // namespace swave
