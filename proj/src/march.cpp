#include "swave/march.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace swave {

BlowupDetected::BlowupDetected(double t, long k)
    : std::runtime_error("non-finite field at t=" + std::to_string(t) + ", k=" + std::to_string(k)),
      t_(t), k_(k)
{
}

FieldState::FieldState(const CharGrid& grid)
    : grid_(grid), a_(static_cast<std::size_t>(grid.nodes_per_level()), 0.0), b_(a_), u_(a_),
      a_next_(a_), b_next_(a_), u_next_(a_), f_(a_)
{
}

double FieldState::max_amplitude() const
{
    const TraceRow& r = trace_.back();
    return std::max(r.sup_a, r.sup_b);
}

void FieldState::set_b(long k, double value)
{
    const long K = grid_.window(level_);
    if (k < -K || k > K)
        throw std::out_of_range("FieldState::set_b outside the current window");
    b_[static_cast<std::size_t>(k + grid_.half_nodes())] = value;
    trace_.pop_back();
    record_trace();
}

void FieldState::record_trace()
{
    const long N = grid_.half_nodes();
    const long K = grid_.window(level_);
    TraceRow row{t(), 0.0, 0.0, 0.0};
    for (long i = N - K; i <= N + K; ++i) {
        const auto j = static_cast<std::size_t>(i);
        row.sup_a = std::max(row.sup_a, std::abs(a_[j]));
        row.sup_b = std::max(row.sup_b, std::abs(b_[j]));
        row.sup_u = std::max(row.sup_u, std::abs(u_[j]));
    }
    trace_.push_back(row);
}

FieldState init_fields(const InitialData& data, double eps, const CharGrid& grid)
{
    if (!std::isfinite(eps) || eps < 0.0)
        throw std::invalid_argument("eps must be finite and non-negative");
    if (!(grid.R() >= data.R()))
        throw std::invalid_argument("grid cone is narrower than the data support");
    FieldState s(grid);
    const long N = grid.half_nodes();
    const long K = grid.window(0);
    for (long k = -K; k <= K; ++k) {
        const double x = grid.x(k);
        const auto i = static_cast<std::size_t>(k + N);
        const double g = data.g(x);
        const double df = data.df(x);
        s.a_[i] = eps * (g + df);
        s.b_[i] = eps * (g - df);
        s.u_[i] = eps * data.f(x);
    }
    s.record_trace();
    return s;
}

void step(FieldState& s, const NonlinearityParams& params)
{
    const CharGrid& grid = s.grid_;
    if (s.level_ >= grid.steps())
        throw std::logic_error("step: already at the final level");
    const long N = grid.half_nodes();
    const long K = grid.window(s.level_);
    const long Kn = std::min(grid.window(s.level_ + 1), N);
    const long last = grid.nodes_per_level() - 1;
    const double h = grid.h();
    const double half_h = 0.5 * h;

    auto& a = s.a_;
    auto& b = s.b_;
    auto& u = s.u_;
    auto& F = s.f_;
    for (long i = N - K; i <= N + K; ++i) {
        const auto j = static_cast<std::size_t>(i);
        F[j] = source_ab(a[j], b[j], params);
    }
    // Columns beyond the lattice edge read as zero; the cone never gets there.
    auto at = [last](const std::vector<double>& row, long i) {
        return (i < 0 || i > last) ? 0.0 : row[static_cast<std::size_t>(i)];
    };

    const double t_next = grid.t(s.level_ + 1);
    for (long i = N - Kn; i <= N + Kn; ++i) {
        const auto j = static_cast<std::size_t>(i);
        const double ar = at(a, i + 1);
        const double fr = at(F, i + 1);
        const double bl = at(b, i - 1);
        const double fl = at(F, i - 1);
        const double a_pred = ar + h * fr;
        const double b_pred = bl + h * fl;
        const double f_pred = source_ab(a_pred, b_pred, params);
        const double an = ar + half_h * (fr + f_pred);
        const double bn = bl + half_h * (fl + f_pred);
        const double un = u[j] + half_h * (0.5 * (a[j] + b[j]) + 0.5 * (an + bn));
        if (!std::isfinite(an) || !std::isfinite(bn) || !std::isfinite(un))
            throw BlowupDetected(t_next, i - N);
        s.a_next_[j] = an;
        s.b_next_[j] = bn;
        s.u_next_[j] = un;
    }
    a.swap(s.a_next_);
    b.swap(s.b_next_);
    u.swap(s.u_next_);
    ++s.level_;
    s.record_trace();
}

const char* to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Completed:
        return "Completed";
    case SolveStatus::ThresholdCrossed:
        return "ThresholdCrossed";
    case SolveStatus::BlowupDetected:
        return "BlowupDetected";
    }
    return "Unknown";
}

namespace {

Crossing locate_crossing(const FieldState& s)
{
    const CharGrid& grid = s.grid();
    const long K = grid.window(s.level());
    Crossing c;
    c.t = s.t();
    double best = -1.0;
    for (long k = -K; k <= K; ++k) {
        const double aa = std::abs(s.a(k));
        const double bb = std::abs(s.b(k));
        if (aa > best) {
            best = aa;
            c.k = k;
            c.from_a = true;
        }
        if (bb > best) {
            best = bb;
            c.k = k;
            c.from_a = false;
        }
    }
    c.x = grid.x(c.k);
    c.x0 = c.from_a ? c.x + c.t : c.x - c.t;
    return c;
}

} // namespace

SolveResult solve(const InitialData& data, const NonlinearityParams& params, double eps, double T,
                  double h, const SolveOptions& options)
{
    if (!(options.amp_threshold > 0.0))
        throw std::invalid_argument("amp_threshold must be positive");
    CharGrid grid(h, T, data.R());
    SolveResult result{SolveStatus::Completed, init_fields(data, eps, grid), std::nullopt};
    FieldState& s = result.state;
    if (options.observer)
        options.observer(s);
    while (s.level() < grid.steps()) {
        try {
            step(s, params);
        } catch (const BlowupDetected& e) {
            result.status = SolveStatus::BlowupDetected;
            Crossing c;
            c.t = e.t();
            c.k = e.k();
            c.x = grid.x(e.k());
            c.x0 = c.x;
            result.crossing = c;
            return result;
        }
        if (options.observer)
            options.observer(s);
        if (s.max_amplitude() > options.amp_threshold) {
            result.status = SolveStatus::ThresholdCrossed;
            result.crossing = locate_crossing(s);
            return result;
        }
    }
    return result;
}

std::vector<double> amplitude_series(std::span<const TraceRow> trace, Variant variant)
{
    std::vector<double> out;
    out.reserve(trace.size());
    for (const TraceRow& r : trace) {
        switch (variant) {
        case Variant::SpecialPlus:
            out.push_back(r.sup_a);
            break;
        case Variant::SpecialMinus:
            out.push_back(r.sup_b);
            break;
        default:
            out.push_back(std::max(r.sup_a, r.sup_b));
            break;
        }
    }
    return out;
}

} // namespace swave
