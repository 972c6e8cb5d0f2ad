#pragma once

#include "swave/freewave.hpp"
#include "swave/grid.hpp"
#include "swave/initial_data.hpp"
#include "swave/nonlinearity.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace swave {

/// Non-finite source or field value during a Picard sweep.
class BlowupIndicated : public std::runtime_error {
public:
    BlowupIndicated(long k, long n);
    long k() const { return k_; }
    long n() const { return n_; }

private:
    long k_;
    long n_;
};

/// Nodewise F(v, w). Throws std::domain_error on NaN input.
GridFn source(const GridFn& v, const GridFn& w, const NonlinearityParams& params);

/// Space-time iterate (v_j, w_j) ~ (u_t, u_x) of
///
///   v_{j+1} = eps u0_t + L'(F(v_j, w_j)),   w_{j+1} = eps u0_x + conj(L')(F(v_j, w_j)),
///
/// starting from (v_1, w_1) = (eps u0_t, eps u0_x). Optional derivative
/// fields (v_x, w_x) follow the differentiated system.
class PicardState {
public:
    PicardState(const InitialData& data, const NonlinearityParams& params, double eps,
                const CharGrid& grid, bool with_derivatives = false);

    const CharGrid& grid() const { return v_.grid(); }
    const FreeWave& free_wave() const { return free_; }
    const NonlinearityParams& params() const { return params_; }
    double eps() const { return eps_; }

    const GridFn& v() const { return v_; }
    const GridFn& w() const { return w_; }
    bool has_derivatives() const { return vx_.has_value(); }
    const GridFn& v_x() const { return *vx_; }
    const GridFn& w_x() const { return *wx_; }

    /// Index j of the current iterate (1 after construction).
    int iteration() const { return iteration_; }
    /// r_j = ||v_{j+1} - v_j|| + ||w_{j+1} - w_j|| in the sup norm.
    const std::vector<double>& residuals() const { return residuals_; }
    /// Same for (v_x, w_x) when derivative fields are iterated.
    const std::vector<double>& derivative_residuals() const { return deriv_residuals_; }

    /// ||v|| + ||v_x|| + ||w|| + ||w_x||; the derivative norms come from the
    /// iterated fields when present, otherwise from centred differences in x.
    double x_norm() const;

private:
    friend void iterate_once(PicardState&);
    friend void iterate_once_deriv(PicardState&);

    void advance(bool with_derivatives);

    FreeWave free_;
    NonlinearityParams params_;
    double eps_;
    GridFn v_, w_;
    std::optional<GridFn> vx_, wx_;
    int iteration_ = 1;
    std::vector<double> residuals_;
    std::vector<double> deriv_residuals_;
};

/// One Picard step on (v, w). Throws BlowupIndicated on non-finite values;
/// the state is then only partially updated.
void iterate_once(PicardState& state);
/// One joint step on (v, w, v_x, w_x), all driven by the j-th iterate.
/// Requires a state built with derivative fields.
void iterate_once_deriv(PicardState& state);

enum class PicardStatus { Converged, NotConverged, BlowupIndicated };

struct PicardOptions {
    /// <= 0 selects the default 1e-10 * max(eps, 1).
    double tol = 0.0;
    int max_iter = 200;
    bool derivatives = false;
};

double default_picard_tol(double eps);

struct PicardResult {
    PicardStatus status;
    PicardState state;
    double tol;
    /// Node of the first non-finite value when status == BlowupIndicated.
    std::optional<std::pair<long, long>> blowup_node;

    int iterations() const { return state.iteration(); }
    const std::vector<double>& residuals() const { return state.residuals(); }
};

/// Iterate on the grid CharGrid(h, T, data.R()) until r_j <= tol.
PicardResult run(const InitialData& data, const NonlinearityParams& params, double eps, double T,
                 double h, const PicardOptions& options = {});

/// u = eps u0 + L(F(v, w)).
GridFn reconstruct_u(const PicardState& state);

struct DerivativeConsistency {
    double time_error;  ///< max |v - D_t u| over interior levels, centred D_t
    double space_error; ///< max |w - D_x u| over the same nodes, centred D_x
};

DerivativeConsistency derivative_consistency(const PicardState& state, const GridFn& u);

const char* to_string(PicardStatus s);

} // namespace swave
