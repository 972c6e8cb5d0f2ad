#pragma once

#include "swave/initial_data.hpp"
#include "swave/nonlinearity.hpp"

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace swave {

enum class LifespanMethod {
    MarchFit,        ///< least-squares blow-up time from the march trace
    MarchThreshold,  ///< threshold-crossing time (fit unavailable)
    PicardBisection, ///< largest T with a converged Picard run
};

std::string_view method_name(LifespanMethod m);

struct LifespanRecord {
    double eps;
    double T_obs;
    LifespanMethod method;
    double h;
    double threshold;
    bool censored;
};

struct SweepOptions {
    double h = 1.0 / 128.0;
    /// <= 0 selects default_T_cap().
    double T_cap = 0.0;
    double threshold = 1e6;
    unsigned jobs = 1;
};

/// 10 x the expected lifespan at the smallest eps: oracle_t0(M*, eps, p)
/// for the special models, eps^{-(p+q-1)} for the product model.
double default_T_cap(const InitialData& data, const NonlinearityParams& params, double eps_min);

/// One march per eps up to T_cap; uncensored records carry the fitted
/// blow-up time. Records come back sorted by eps.
std::vector<LifespanRecord> sweep(const InitialData& data, const NonlinearityParams& params,
                                  std::span<const double> eps_list, const SweepOptions& options);

struct PicardSweepOptions {
    double h = 1.0 / 32.0;
    double T_cap = 0.0;
    double tol = 0.0;
    int max_iter = 200;
    int bisection_steps = 8;
    unsigned jobs = 1;
};

/// Largest T in (0, T_cap] for which picard::run converges, located by
/// bisection. A lower-bound proxy for the lifespan.
std::vector<LifespanRecord> sweep_picard(const InitialData& data, const NonlinearityParams& params,
                                         std::span<const double> eps_list,
                                         const PicardSweepOptions& options);

class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FitReport {
    double slope;
    double intercept;
    double r_squared;
    std::vector<double> residuals;
    double expected_slope;
    double rel_tolerance;
    std::size_t points;
    bool exploratory;
    bool pass;
};

/// OLS of log T_obs on log eps over the uncensored records. Throws
/// InsufficientData below three points and std::invalid_argument when the
/// records mix methods.
FitReport fit_exponent(std::span<const LifespanRecord> records, const NonlinearityParams& params,
                       double rel_tolerance = 0.05);

} // namespace swave
