#include "swave/picard.hpp"

#include "swave/duhamel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace swave {

BlowupIndicated::BlowupIndicated(long k, long n)
    : std::runtime_error("non-finite value in Picard iterate at node k=" + std::to_string(k) +
                         ", n=" + std::to_string(n)),
      k_(k), n_(n)
{
}

GridFn source(const GridFn& v, const GridFn& w, const NonlinearityParams& params)
{
    if (!(v.grid() == w.grid()))
        throw std::invalid_argument("source: v and w live on different grids");
    GridFn out(v.grid());
    auto vv = v.values();
    auto ww = w.values();
    auto oo = out.values();
    for (std::size_t j = 0; j < oo.size(); ++j) {
        if (std::isnan(vv[j]) || std::isnan(ww[j]))
            throw std::domain_error("source: NaN in input fields");
        oo[j] = source_vw(vv[j], ww[j], params);
    }
    return out;
}

PicardState::PicardState(const InitialData& data, const NonlinearityParams& params, double eps,
                         const CharGrid& grid, bool with_derivatives)
    : free_(data, eps), params_(params), eps_(eps), v_(grid), w_(grid)
{
    if (!std::isfinite(eps) || eps < 0.0)
        throw std::invalid_argument("eps must be finite and non-negative");
    v_.fill([&](double x, double t) { return eps * free_.u0_t(x, t); });
    w_.fill([&](double x, double t) { return eps * free_.u0_x(x, t); });
    if (with_derivatives) {
        vx_.emplace(grid);
        wx_.emplace(grid);
        vx_->fill([&](double x, double t) { return eps * free_.u0_tx(x, t); });
        wx_->fill([&](double x, double t) { return eps * free_.u0_xx(x, t); });
    }
}

namespace {

double centred_dx_sup(const GridFn& f)
{
    const CharGrid& g = f.grid();
    const double inv = 0.5 / g.h();
    double m = 0.0;
    for (long n = 0; n < g.levels(); ++n) {
        const long K = g.window(n);
        for (long k = -K; k <= K; ++k)
            m = std::max(m, std::abs((f(k + 1, n) - f(k - 1, n)) * inv));
    }
    return m;
}

} // namespace

double PicardState::x_norm() const
{
    const double dv = has_derivatives() ? vx_->sup_norm() : centred_dx_sup(v_);
    const double dw = has_derivatives() ? wx_->sup_norm() : centred_dx_sup(w_);
    return v_.sup_norm() + dv + w_.sup_norm() + dw;
}

// Streams the iteration level by level. Level n+1 of the new iterate only
// needs the source at levels n and n+1 of the old one, so the old rows are
// turned into source rows before being overwritten in place.
void PicardState::advance(bool with_derivatives)
{
    const CharGrid& grid = v_.grid();
    const double eps = eps_;
    TrapezoidSweep sweep(grid);
    std::optional<TrapezoidSweep> dsweep;
    if (with_derivatives)
        dsweep.emplace(grid);

    std::vector<double> F, S;
    double rv = 0.0, rw = 0.0, rvx = 0.0, rwx = 0.0;

    for (long n = 0; n < grid.levels(); ++n) {
        const long K = grid.window(n);
        const double t = grid.t(n);
        auto vrow = v_.row(n);
        auto wrow = w_.row(n);
        F.resize(vrow.size());
        for (std::size_t j = 0; j < vrow.size(); ++j) {
            F[j] = source_vw(vrow[j], wrow[j], params_);
            if (!std::isfinite(F[j]))
                throw BlowupIndicated(static_cast<long>(j) - K, n);
        }
        if (with_derivatives) {
            auto vxrow = vx_->row(n);
            auto wxrow = wx_->row(n);
            S.resize(vrow.size());
            for (std::size_t j = 0; j < vrow.size(); ++j) {
                double dv = 0.0, dw = 0.0;
                source_gradient(vrow[j], wrow[j], params_, dv, dw);
                S[j] = dv * vxrow[j] + dw * wxrow[j];
                if (!std::isfinite(S[j]))
                    throw BlowupIndicated(static_cast<long>(j) - K, n);
            }
        }

        if (n == 0) {
            sweep.start(F);
            if (dsweep)
                dsweep->start(S);
        } else {
            sweep.advance(F);
            if (dsweep)
                dsweep->advance(S);
        }

        auto P = sweep.P();
        auto Q = sweep.Q();
        for (long k = -K; k <= K; ++k) {
            const auto j = static_cast<std::size_t>(k + K);
            const double x = grid.x(k);
            const double vn = eps * free_.u0_t(x, t) + 0.5 * (P[j] + Q[j]);
            const double wn = eps * free_.u0_x(x, t) + 0.5 * (P[j] - Q[j]);
            if (!std::isfinite(vn) || !std::isfinite(wn))
                throw BlowupIndicated(k, n);
            rv = std::max(rv, std::abs(vn - vrow[j]));
            rw = std::max(rw, std::abs(wn - wrow[j]));
            vrow[j] = vn;
            wrow[j] = wn;
        }
        if (dsweep) {
            auto dP = dsweep->P();
            auto dQ = dsweep->Q();
            auto vxrow = vx_->row(n);
            auto wxrow = wx_->row(n);
            for (long k = -K; k <= K; ++k) {
                const auto j = static_cast<std::size_t>(k + K);
                const double x = grid.x(k);
                const double vxn = eps * free_.u0_tx(x, t) + 0.5 * (dP[j] + dQ[j]);
                const double wxn = eps * free_.u0_xx(x, t) + 0.5 * (dP[j] - dQ[j]);
                if (!std::isfinite(vxn) || !std::isfinite(wxn))
                    throw BlowupIndicated(k, n);
                rvx = std::max(rvx, std::abs(vxn - vxrow[j]));
                rwx = std::max(rwx, std::abs(wxn - wxrow[j]));
                vxrow[j] = vxn;
                wxrow[j] = wxn;
            }
        }
    }
    residuals_.push_back(rv + rw);
    if (with_derivatives)
        deriv_residuals_.push_back(rvx + rwx);
    ++iteration_;
}

void iterate_once(PicardState& state) { state.advance(false); }

void iterate_once_deriv(PicardState& state)
{
    if (!state.has_derivatives())
        throw std::logic_error("iterate_once_deriv: state has no derivative fields");
    const auto& np = state.params();
    if (np.variant == Variant::GeneralProduct && np.p == 0.0 && np.q == 0.0)
        throw std::invalid_argument("iterate_once_deriv: needs a non-trivial exponent");
    state.advance(true);
}

double default_picard_tol(double eps) { return 1e-10 * std::max(eps, 1.0); }

PicardResult run(const InitialData& data, const NonlinearityParams& params, double eps, double T,
                 double h, const PicardOptions& options)
{
    if (options.max_iter < 1)
        throw std::invalid_argument("max_iter must be at least 1");
    const double tol = options.tol > 0.0 ? options.tol : default_picard_tol(eps);
    CharGrid grid(h, T, data.R());
    PicardResult result{PicardStatus::NotConverged,
                        PicardState(data, params, eps, grid, options.derivatives), tol, std::nullopt};
    for (int it = 0; it < options.max_iter; ++it) {
        try {
            if (options.derivatives)
                iterate_once_deriv(result.state);
            else
                iterate_once(result.state);
        } catch (const BlowupIndicated& e) {
            result.status = PicardStatus::BlowupIndicated;
            result.blowup_node = std::make_pair(e.k(), e.n());
            return result;
        }
        if (result.state.residuals().back() <= tol) {
            result.status = PicardStatus::Converged;
            return result;
        }
    }
    return result;
}

GridFn reconstruct_u(const PicardState& state)
{
    const CharGrid& grid = state.grid();
    const auto& fw = state.free_wave();
    const double eps = state.eps();
    GridFn u(grid);
    DiamondSweep sweep(grid);
    sweep.start();
    std::vector<double> F;
    for (long n = 0; n < grid.levels(); ++n) {
        const long K = grid.window(n);
        const double t = grid.t(n);
        auto urow = u.row(n);
        auto W = sweep.W();
        for (long k = -K; k <= K; ++k) {
            const auto j = static_cast<std::size_t>(k + K);
            urow[j] = eps * fw.u0(grid.x(k), t) + W[j];
        }
        if (n + 1 < grid.levels()) {
            auto vrow = state.v().row(n);
            auto wrow = state.w().row(n);
            F.resize(vrow.size());
            for (std::size_t j = 0; j < F.size(); ++j)
                F[j] = source_vw(vrow[j], wrow[j], state.params());
            sweep.advance(F);
        }
    }
    return u;
}

DerivativeConsistency derivative_consistency(const PicardState& state, const GridFn& u)
{
    const CharGrid& grid = state.grid();
    if (!(u.grid() == grid))
        throw std::invalid_argument("derivative_consistency: grid mismatch");
    const double inv = 0.5 / grid.h();
    DerivativeConsistency out{0.0, 0.0};
    for (long n = 1; n + 1 < grid.levels(); ++n) {
        const long K = grid.window(n);
        for (long k = -K; k <= K; ++k) {
            const double dt = (u(k, n + 1) - u(k, n - 1)) * inv;
            const double dx = (u(k + 1, n) - u(k - 1, n)) * inv;
            out.time_error = std::max(out.time_error, std::abs(state.v()(k, n) - dt));
            out.space_error = std::max(out.space_error, std::abs(state.w()(k, n) - dx));
        }
    }
    return out;
}

const char* to_string(PicardStatus s)
{
    switch (s) {
    case PicardStatus::Converged:
        return "Converged";
    case PicardStatus::NotConverged:
        return "NotConverged";
    case PicardStatus::BlowupIndicated:
        return "BlowupIndicated";
    }
    return "Unknown";
}

} // namespace swave
