#include "swave/lifespan.hpp"

#include "swave/blowup.hpp"
#include "swave/march.hpp"
#include "swave/picard.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace swave {

std::string_view method_name(LifespanMethod m)
{
    switch (m) {
    case LifespanMethod::MarchFit:
        return "march-fit";
    case LifespanMethod::MarchThreshold:
        return "march-threshold";
    case LifespanMethod::PicardBisection:
        return "picard-bisection";
    }
    return "unknown";
}

namespace {

void check_eps_list(std::span<const double> eps_list)
{
    if (eps_list.size() < 3)
        throw std::invalid_argument("sweep needs at least three eps values");
    for (double e : eps_list)
        if (!(e > 0.0) || !std::isfinite(e))
            throw std::invalid_argument("sweep eps values must be positive");
}

// Runs task(i) for i in [0, count) on up to `jobs` threads. The first
// exception is rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task)
{
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

void sort_by_eps(std::vector<LifespanRecord>& records)
{
    std::sort(records.begin(), records.end(),
              [](const LifespanRecord& a, const LifespanRecord& b) { return a.eps < b.eps; });
}

} // namespace

double default_T_cap(const InitialData& data, const NonlinearityParams& params, double eps_min)
{
    switch (params.variant) {
    case Variant::SpecialPlus:
    case Variant::SpecialMinus: {
        const Sign s = params.variant == Variant::SpecialPlus ? Sign::Plus : Sign::Minus;
        const MStar m = eval_Mstar(data, s);
        if (m.degenerate)
            throw std::invalid_argument("data carry no blow-up amplitude; give T_cap explicitly");
        return 10.0 * oracle_t0(m.value, eps_min, params.p);
    }
    case Variant::GeneralProduct:
        return 10.0 * std::pow(eps_min, -params.lifespan_exponent());
    case Variant::Linear:
        break;
    }
    throw std::invalid_argument("linear model has no lifespan; give T_cap explicitly");
}

std::vector<LifespanRecord> sweep(const InitialData& data, const NonlinearityParams& params,
                                  std::span<const double> eps_list, const SweepOptions& options)
{
    check_eps_list(eps_list);
    const double eps_min = *std::min_element(eps_list.begin(), eps_list.end());
    const double T_cap = options.T_cap > 0.0 ? options.T_cap : default_T_cap(data, params, eps_min);
    const double p_fit = params.riccati_exponent();

    std::vector<LifespanRecord> records(eps_list.size());
    parallel_for(eps_list.size(), options.jobs, [&](std::size_t i) {
        const double eps = eps_list[i];
        SolveOptions so;
        so.amp_threshold = options.threshold;
        const SolveResult res = solve(data, params, eps, T_cap, options.h, so);
        LifespanRecord rec{eps, res.t_end(), LifespanMethod::MarchFit, options.h, options.threshold, false};
        if (res.status == SolveStatus::Completed) {
            rec.censored = true;
        } else {
            std::vector<double> t;
            t.reserve(res.trace().size());
            for (const auto& row : res.trace())
                t.push_back(row.t);
            const auto amp = amplitude_series(res.trace(), params.variant);
            try {
                rec.T_obs = estimate_blowup_time(t, amp, p_fit).t0;
            } catch (const EstimationFailure&) {
                rec.T_obs = res.crossing ? res.crossing->t : res.t_end();
                rec.method = LifespanMethod::MarchThreshold;
            }
        }
        records[i] = rec;
    });
    sort_by_eps(records);
    return records;
}

std::vector<LifespanRecord> sweep_picard(const InitialData& data, const NonlinearityParams& params,
                                         std::span<const double> eps_list,
                                         const PicardSweepOptions& options)
{
    check_eps_list(eps_list);
    if (options.bisection_steps < 1)
        throw std::invalid_argument("bisection_steps must be at least 1");
    const double eps_min = *std::min_element(eps_list.begin(), eps_list.end());
    const double T_cap = options.T_cap > 0.0 ? options.T_cap : default_T_cap(data, params, eps_min);

    std::vector<LifespanRecord> records(eps_list.size());
    parallel_for(eps_list.size(), options.jobs, [&](std::size_t i) {
        const double eps = eps_list[i];
        PicardOptions po;
        po.tol = options.tol;
        po.max_iter = options.max_iter;
        auto converges = [&](double T) {
            if (T < options.h)
                return true;
            return run(data, params, eps, T, options.h, po).status == PicardStatus::Converged;
        };
        LifespanRecord rec{eps, T_cap, LifespanMethod::PicardBisection, options.h, 0.0, false};
        if (converges(T_cap)) {
            rec.censored = true;
        } else {
            double lo = 0.0, hi = T_cap;
            for (int s = 0; s < options.bisection_steps; ++s) {
                const double mid = 0.5 * (lo + hi);
                (converges(mid) ? lo : hi) = mid;
            }
            rec.T_obs = lo > 0.0 ? lo : 0.5 * hi;
        }
        records[i] = rec;
    });
    sort_by_eps(records);
    return records;
}

FitReport fit_exponent(std::span<const LifespanRecord> records, const NonlinearityParams& params,
                       double rel_tolerance)
{
    std::vector<const LifespanRecord*> used;
    for (const auto& r : records)
        if (!r.censored)
            used.push_back(&r);
    if (used.size() < 3)
        throw InsufficientData("exponent fit needs at least three uncensored records");
    for (const auto* r : used) {
        if (r->method != used.front()->method)
            throw std::invalid_argument("exponent fit mixes breakdown methods");
        if (!(r->T_obs > 0.0) || !(r->eps > 0.0))
            throw std::invalid_argument("exponent fit needs positive eps and T_obs");
    }

    const auto n = static_cast<double>(used.size());
    double xm = 0.0, ym = 0.0;
    for (const auto* r : used) {
        xm += std::log(r->eps);
        ym += std::log(r->T_obs);
    }
    xm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto* r : used) {
        const double dx = std::log(r->eps) - xm;
        const double dy = std::log(r->T_obs) - ym;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0))
        throw InsufficientData("exponent fit needs at least two distinct eps values");

    FitReport rep{};
    rep.slope = sxy / sxx;
    rep.intercept = ym - rep.slope * xm;
    double ss_res = 0.0;
    for (const auto* r : used) {
        const double res = std::log(r->T_obs) - (rep.intercept + rep.slope * std::log(r->eps));
        rep.residuals.push_back(res);
        ss_res += res * res;
    }
    rep.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    rep.expected_slope = -params.lifespan_exponent();
    rep.rel_tolerance = rel_tolerance;
    rep.points = used.size();
    rep.exploratory = params.exploratory();
    rep.pass = std::abs(rep.slope - rep.expected_slope) <= rel_tolerance * std::abs(rep.expected_slope);
    return rep;
}

} // namespace swave
