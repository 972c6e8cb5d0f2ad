// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "swave/blowup.hpp"
#include "swave/duhamel.hpp"
#include "swave/lifespan.hpp"
#include "swave/march.hpp"
#include "swave/output.hpp"
#include "swave/picard.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace swave;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail)
{
    if (!pass)
        ++failures;
    std::printf("%s  %d  %-34s %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
}

std::vector<double> times_of(const std::vector<TraceRow>& trace)
{
    std::vector<double> t;
    for (const auto& r : trace)
        t.push_back(r.t);
    return t;
}

void operator_exactness()
{
    const auto start = Clock::now();
    const CharGrid g(1.0 / 256, 4.0, 1.0);
    const GridFn one(g, 1.0);
    const GridFn Lp = op_Lprime(one), Lb = op_Lbar(one), L = op_L(one);
    const double secs = seconds_since(start);
    double e_lp = 0.0, e_lb = 0.0, e_l = 0.0;
    for (long n = 0; n < g.levels(); ++n) {
        const double t = g.t(n);
        for (long k = -g.window(n); k <= g.window(n); ++k) {
            e_lp = std::max(e_lp, std::abs(Lp(k, n) - t));
            e_lb = std::max(e_lb, std::abs(Lb(k, n)));
            if (n > 0)
                e_l = std::max(e_l, std::abs(L(k, n) / (0.5 * t * t) - 1.0));
        }
    }
    const bool pass = e_lp <= 1e-12 && e_lb <= 1e-12 && e_l <= 1e-9 && secs < 1.0;
    report(1, "operator exactness", pass,
           "L' err " + num(e_lp) + ", conj err " + num(e_lb) + ", L rel err " + num(e_l) + ", " + num(secs) + " s");
}

void domination()
{
    const CharGrid g(1.0 / 32, 2.0, 1.0);
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    std::bernoulli_distribution keep(0.5);
    long violations = 0;
    double worst_dom = -1e300, worst_apriori = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        GridFn U(g);
        const bool sparse = trial % 2 == 1;
        for (double& u : U.values())
            u = (!sparse || keep(rng)) ? val(rng) * (1 + trial % 7) : 0.0;
        const GridFn Lp = op_Lprime(U), Lb = op_Lbar(U);
        for (long n = 0; n < g.levels(); ++n)
            for (long k = -g.window(n); k <= g.window(n); ++k) {
                const double d = std::abs(Lb(k, n)) - Lp(k, n);
                worst_dom = std::max(worst_dom, d);
                if (d > 1e-12)
                    ++violations;
            }
        const double ratio = Lp.sup_norm() / (g.T() * U.sup_norm());
        worst_apriori = std::max(worst_apriori, ratio);
        if (Lp.sup_norm() > g.T() * U.sup_norm() + 1e-12)
            ++violations;
    }
    report(2, "domination and a priori bound", violations == 0,
           std::to_string(violations) + " violations in 1000 trials, max(|conj|-L') " + num(worst_dom) +
               ", max ||L'||/(T||U||) " + num(worst_apriori));
}

void free_transport()
{
    const auto data = make_bump_data(0.7, 1.0, 1.0);
    const auto np = make_params(Variant::Linear, 2.0);
    const double h = 1.0 / 64;
    const CharGrid g(h, 10000 * h, 1.0);
    FieldState s = init_fields(data, 1.0, g);
    auto l2 = [h](std::span<const double> row) {
        double sum = 0.0;
        for (double v : row)
            sum += v * v;
        return std::sqrt(h * sum);
    };
    const double a0 = l2(s.a_row()), b0 = l2(s.b_row());
    double drift = 0.0;
    bool outside_zero = true;
    for (long n = 1; n <= 10000; ++n) {
        step(s, np);
        drift = std::max({drift, std::abs(l2(s.a_row()) / a0 - 1.0), std::abs(l2(s.b_row()) / b0 - 1.0)});
        for (long k = -g.half_nodes(); k <= g.half_nodes(); ++k)
            if (!g.in_cone(k, n) && (s.a(k) != 0.0 || s.b(k) != 0.0 || s.u(k) != 0.0))
                outside_zero = false;
    }
    report(3, "free transport conservation", drift <= 1e-12 && outside_zero,
           "10^4 steps, max relative l2 drift " + num(drift) + (outside_zero ? ", zero outside cone" : ", NONZERO outside cone"));
}

void derivative_consistency_order()
{
    const auto data = make_bump_data(0.0, 1.0, 1.0);
    const auto np = make_params(Variant::GeneralProduct, 2.0, 2.0);
    std::vector<double> err;
    bool converged = true;
    for (double n : {128.0, 256.0, 512.0}) {
        double e = 0.0;
        {
            const auto res = run(data, np, 0.05, 20.0, 1.0 / n);
            converged = converged && res.status == PicardStatus::Converged;
            e = derivative_consistency(res.state, reconstruct_u(res.state)).time_error;
        }
        err.push_back(e);
    }
    const double o1 = std::log2(err[0] / err[1]), o2 = std::log2(err[1] / err[2]);
    report(4, "derivative consistency order", converged && o1 >= 1.8 && o2 >= 1.8,
           "||v - D_t u|| = " + num(err[0]) + ", " + num(err[1]) + ", " + num(err[2]) + "; orders " + num(o1) +
               ", " + num(o2));
}

void exact_blowup_time()
{
    const auto data = make_bump_data(0.0, 1.0, 1.0);
    struct Case {
        double p, eps;
    };
    bool pass = true;
    std::string detail;
    for (const Case c : {Case{2.0, 0.25}, Case{2.0, 0.5}, Case{3.0, 0.5}}) {
        const auto np = make_params(Variant::SpecialPlus, c.p);
        const double t0 = oracle_t0(1.0, c.eps, c.p);
        double rel[2] = {0, 0};
        double secs = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double h = i == 0 ? 1.0 / 512 : 1.0 / 1024;
            const auto start = Clock::now();
            const auto r = solve(data, np, c.eps, 2.0 * t0, h);
            try {
                const auto est = estimate_blowup_time(times_of(r.trace()), amplitude_series(r.trace(), np.variant), c.p);
                rel[i] = std::abs(est.t0 - t0) / t0;
            } catch (const EstimationFailure&) {
                rel[i] = INFINITY;
            }
            secs = seconds_since(start);
        }
        const bool ok = rel[1] <= 0.02 && rel[1] < rel[0] && secs < 60.0;
        pass = pass && ok;
        detail += "(p=" + num(c.p) + ", eps=" + num(c.eps) + ", t0=" + num(t0) + ") rel err " + num(rel[0]) + " -> " +
                  num(rel[1]) + "; ";
    }
    report(5, "exact blow-up time", pass, detail);
}

void lifespan_exponent()
{
    const auto data = make_bump_data(0.0, 1.0, 1.0);
    const std::vector<double> eps{0.4, 0.2, 0.1, 0.05};
    bool pass = true;
    std::string detail;
    for (double p : {2.0, 3.0}) {
        const auto np = make_params(Variant::SpecialPlus, p);
        SweepOptions so;
        so.h = 1.0 / 128;
        try {
            const auto rep = fit_exponent(sweep(data, np, eps, so), np);
            pass = pass && rep.pass && rep.r_squared >= 0.999 && rep.points == eps.size();
            detail += "p=" + num(p) + ": slope " + format_double(rep.slope).substr(0, 8) + " vs " +
                      num(rep.expected_slope) + ", R^2 " + format_double(rep.r_squared).substr(0, 9) + "; ";
        } catch (const std::exception& e) {
            pass = false;
            detail += "p=" + num(p) + ": " + e.what() + "; ";
        }
    }
    report(6, "lifespan exponent (signed model)", pass, detail);
}

void small_data_picard()
{
    const auto start = Clock::now();
    const auto data = make_bump_data(0.0, 1.0, 1.0);
    const auto np = make_params(Variant::GeneralProduct, 2.0, 2.0);
    const double h = 1.0 / 16;
    bool pass = true;
    std::string detail;
    double largest_product = 0.0; // eps (T + R)^{1/(p+q-1)} over converged runs
    for (double eps : {0.4, 0.2, 0.1}) {
        const double T = 0.1 * std::pow(eps, -3.0);
        const auto pr = run(data, np, eps, T, h);
        const auto& r = pr.residuals();
        double worst_ratio = 0.0;
        // tail: the second half of the successive ratios, at least two of them
        const std::size_t ratios = r.size() > 1 ? r.size() - 1 : 0;
        const std::size_t from = ratios > 2 ? ratios - std::max<std::size_t>(2, ratios / 2) : 0;
        for (std::size_t i = from + 1; i < r.size(); ++i)
            if (r[i - 1] > 0.0)
                worst_ratio = std::max(worst_ratio, r[i] / r[i - 1]);
        double diff = 0.0;
        SolveOptions so;
        so.observer = [&](const FieldState& s) {
            const long n = s.level();
            for (long k = -s.grid().window(n); k <= s.grid().window(n); ++k) {
                diff = std::max(diff, std::abs(s.a(k) - (pr.state.v()(k, n) + pr.state.w()(k, n))));
                diff = std::max(diff, std::abs(s.b(k) - (pr.state.v()(k, n) - pr.state.w()(k, n))));
            }
        };
        const auto sr = solve(data, np, eps, T, h, so);
        const bool ok = pr.status == PicardStatus::Converged && pr.iterations() <= 60 && worst_ratio <= 0.7 &&
                        sr.status == SolveStatus::Completed && diff <= 1e-5 * eps;
        pass = pass && ok;
        if (pr.status == PicardStatus::Converged)
            largest_product = std::max(largest_product, eps * std::cbrt(T + 1.0));
        detail += "eps=" + num(eps) + ": " + std::to_string(pr.iterations()) + " it, tail ratio " + num(worst_ratio) +
                  ", |march-picard|/eps " + num(diff / eps) + "; ";
    }
    const double secs = seconds_since(start);
    pass = pass && secs < 120.0;
    report(7, "small-data Picard regime", pass,
           detail + "max eps (T+R)^(1/3) " + num(largest_product) + ", " + num(secs) + " s");
}

void traveling_solution()
{
    const auto data = make_traveling_data(1.0, 1.0, Sign::Plus);
    const auto np = make_params(Variant::SpecialPlus, 2.0);
    double err[2];
    bool completed = true;
    for (int i = 0; i < 2; ++i) {
        double e = 0.0;
        SolveOptions so;
        so.observer = [&](const FieldState& s) {
            for (long k = -s.grid().window(s.level()); k <= s.grid().window(s.level()); ++k)
                e = std::max(e, std::abs(s.u(k) - data.f(s.grid().x(k) - s.t())));
        };
        const auto r = solve(data, np, 1.0, 50.0, i == 0 ? 1.0 / 64 : 1.0 / 128, so);
        completed = completed && r.status == SolveStatus::Completed;
        err[i] = e;
    }
    const double order = std::log2(err[0] / err[1]);
    report(8, "global traveling solution", completed && order >= 1.8,
           "T=50, ||u - f(x-t)|| = " + num(err[0]) + " -> " + num(err[1]) + ", order " + num(order));
}

void estimator_self_consistency()
{
    bool pass = true;
    std::string detail;
    for (double p : {1.5, 2.0, 3.0}) {
        const double M = 1.0, eps = 0.5;
        const double t0 = oracle_t0(M, eps, p);
        std::vector<double> t, amp;
        const double dt = t0 / 2048;
        for (int n = 0; n * dt < 0.995 * t0; ++n) {
            t.push_back(n * dt);
            amp.push_back(oracle_U(M, eps, p, n * dt));
        }
        const double rel = std::abs(estimate_blowup_time(t, amp, p).t0 - t0) / t0;
        pass = pass && rel <= 1e-6;
        detail += "p=" + num(p) + ": " + num(rel) + "; ";
    }
    report(9, "estimator self-consistency", pass, detail);
}

void exploratory_product_slope()
{
    const auto data = make_bump_data(0.0, 1.0, 1.0);
    const auto np = make_params(Variant::GeneralProduct, 2.0, 2.0);
    SweepOptions so;
    so.h = 1.0 / 32;
    try {
        const auto rep = fit_exponent(sweep(data, np, std::vector<double>{0.4, 0.3, 0.2}, so), np);
        std::printf("INFO     product-model breakdown slope %s vs %s (reported only), R^2 %s\n",
                    num(rep.slope).c_str(), num(rep.expected_slope).c_str(), num(rep.r_squared).c_str());
    } catch (const std::exception& e) {
        std::printf("INFO     product-model breakdown slope unavailable: %s\n", e.what());
    }
}

} // namespace

int main()
{
    const std::function<void()> criteria[] = {operator_exactness, domination,        free_transport,
                                              derivative_consistency_order, exact_blowup_time,
                                              lifespan_exponent,  small_data_picard, traveling_solution,
                                              estimator_self_consistency};
    for (const auto& c : criteria) {
        try {
            c();
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL     exception: %s\n", e.what());
        }
    }
    exploratory_product_slope();
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
