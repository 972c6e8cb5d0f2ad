#include "swave/selftest.hpp"

#include "swave/duhamel.hpp"
#include "swave/freewave.hpp"
#include "swave/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace swave {

DuhamelOps DuhamelOps::standard()
{
    return DuhamelOps{op_Lprime, op_Lbar, op_L};
}

DuhamelOps DuhamelOps::with_lbar_sign_fault()
{
    DuhamelOps ops = standard();
    ops.lbar = [](const GridFn& U) {
        GridFn P = op_P(U);
        GridFn Q = op_Q(U);
        auto p = P.values();
        auto q = Q.values();
        for (std::size_t j = 0; j < p.size(); ++j)
            p[j] = 0.5 * (p[j] + q[j]);
        return P;
    };
    return ops;
}

namespace {

// phi(x) = (1 - (x/R)^2)^4 and its antiderivative Phi from -R. Time
// independent, so L'(phi) = (Phi(x+t) - Phi(x-t))/2 and
// conj(L')(phi) = (Phi(x+t) - 2 Phi(x) + Phi(x-t))/2.
double phi(double x, double R)
{
    const double s = x / R;
    if (std::abs(s) >= 1.0)
        return 0.0;
    const double z = 1.0 - s * s;
    return z * z * z * z;
}

double Phi(double x, double R)
{
    const double s = x / R;
    if (s <= -1.0)
        return 0.0;
    if (s >= 1.0)
        return R * 256.0 / 315.0;
    const double s2 = s * s;
    const double poly = s * (1.0 + s2 * (-4.0 / 3.0 + s2 * (6.0 / 5.0 + s2 * (-4.0 / 7.0 + s2 / 9.0))));
    return R * (poly + 128.0 / 315.0);
}

struct Recorder {
    std::vector<CheckResult>& out;
    std::string suite;

    void le(const std::string& name, double measured, double bound)
    {
        out.push_back(CheckResult{suite, name, measured <= bound, measured, bound});
    }
    void ge(const std::string& name, double measured, double bound)
    {
        out.push_back(CheckResult{suite, name, measured >= bound, measured, bound});
    }
};

double max_abs_diff(const GridFn& a, const GridFn& b)
{
    auto x = a.values();
    auto y = b.values();
    double m = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        m = std::max(m, std::abs(x[j] - y[j]));
    return m;
}

double closed_form_error(const CharGrid& grid, const DuhamelOps& ops, bool conjugate)
{
    const double R = grid.R();
    GridFn U(grid);
    U.fill([R](double x, double) { return phi(x, R); });
    const GridFn out = conjugate ? ops.lbar(U) : ops.lprime(U);
    double err = 0.0;
    for (long n = 0; n < grid.levels(); ++n) {
        const double t = grid.t(n);
        const long K = grid.window(n);
        for (long k = -K; k <= K; ++k) {
            const double x = grid.x(k);
            const double exact = conjugate
                                     ? 0.5 * (Phi(x + t, R) - 2.0 * Phi(x, R) + Phi(x - t, R))
                                     : 0.5 * (Phi(x + t, R) - Phi(x - t, R));
            err = std::max(err, std::abs(out(k, n) - exact));
        }
    }
    return err;
}

} // namespace

std::vector<CheckResult> run_duhamel_checks(const SelftestOptions& opt, const DuhamelOps& ops)
{
    std::vector<CheckResult> out;
    Recorder rec{out, "duhamel"};
    const CharGrid grid(opt.h, opt.T, opt.R);
    const double T = grid.T();

    {
        GridFn one(grid, 1.0);
        const GridFn lp = ops.lprime(one);
        const GridFn lb = ops.lbar(one);
        const GridFn l = ops.l(one);
        double e_lp = 0.0, e_lb = 0.0, e_l = 0.0;
        for (long n = 0; n < grid.levels(); ++n) {
            const double t = grid.t(n);
            const long K = grid.window(n);
            for (long k = -K; k <= K; ++k) {
                e_lp = std::max(e_lp, std::abs(lp(k, n) - t));
                e_lb = std::max(e_lb, std::abs(lb(k, n)));
                if (n > 0)
                    e_l = std::max(e_l, std::abs(l(k, n) - 0.5 * t * t) / (0.5 * t * t));
            }
        }
        rec.le("L'(1) = t at every node", e_lp, 1e-12);
        rec.le("conj(L')(1) = 0 at every node", e_lb, 1e-12);
        rec.le("L(1) = t^2/2 (relative)", e_l, 1e-9);
    }

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double dom = 0.0, apriori = 0.0, lin = 0.0, parity = 0.0, cone = 0.0;
    for (int trial = 0; trial < opt.random_trials; ++trial) {
        // Strictly positive U: L' - |conj(L')| = min(P, Q) >= t min U.
        GridFn U(grid);
        double umin = 1.0;
        for (double& v : U.values()) {
            v = 0.05 + 0.95 * unit(rng);
            umin = std::min(umin, v);
        }
        const GridFn lp = ops.lprime(U);
        const GridFn lb = ops.lbar(U);
        for (long n = 0; n < grid.levels(); ++n) {
            const double t = grid.t(n);
            const long K = grid.window(n);
            for (long k = -K; k <= K; ++k) {
                const double gap = lp(k, n) - std::abs(lb(k, n));
                const double floor_gap = t * umin * (1.0 - 1e-12);
                dom = std::max(dom, std::max(-gap, floor_gap - gap));
            }
        }

        GridFn S(grid);
        for (double& v : S.values())
            v = 2.0 * unit(rng) - 1.0;
        apriori = std::max(apriori, ops.lprime(S).sup_norm() - T * S.sup_norm() * (1.0 + 1e-12));

        const double alpha = 2.0 * unit(rng) - 1.0;
        const double beta = 2.0 * unit(rng) - 1.0;
        GridFn mix(grid);
        {
            auto m = mix.values();
            auto u = U.values();
            auto s = S.values();
            for (std::size_t j = 0; j < m.size(); ++j)
                m[j] = alpha * u[j] + beta * s[j];
        }
        GridFn combo(grid);
        {
            const GridFn ls = ops.lprime(S);
            auto c = combo.values();
            auto a = lp.values();
            auto b = ls.values();
            for (std::size_t j = 0; j < c.size(); ++j)
                c[j] = alpha * a[j] + beta * b[j];
        }
        lin = std::max(lin, max_abs_diff(ops.lprime(mix), combo) / std::max(1.0, combo.sup_norm()));

        GridFn even(grid);
        for (long n = 0; n < grid.levels(); ++n) {
            const long K = grid.window(n);
            for (long k = 0; k <= K; ++k) {
                const double v = unit(rng);
                even.at(k, n) = v;
                even.at(-k, n) = v;
            }
        }
        const GridFn lbe = ops.lbar(even);
        for (long n = 0; n < grid.levels(); ++n) {
            const long K = grid.window(n);
            for (long k = 0; k <= K; ++k)
                parity = std::max(parity, std::abs(lbe(k, n) + lbe(-k, n)));
        }

        GridFn coned(grid);
        for (long n = 0; n < grid.levels(); ++n) {
            const long K = grid.window(n);
            for (long k = -K; k <= K; ++k)
                coned.at(k, n) = grid.in_cone(k, n) ? unit(rng) : 0.0;
        }
        for (const GridFn& r : {ops.lprime(coned), ops.lbar(coned), ops.l(coned)}) {
            for (long n = 0; n < grid.levels(); ++n) {
                const long K = grid.window(n);
                for (long k = -K; k <= K; ++k)
                    if (!grid.in_cone(k, n))
                        cone = std::max(cone, std::abs(r(k, n)));
            }
        }
    }
    rec.le("domination |conj(L')(U)| <= L'(U), gap >= t min U", dom, 1e-12);
    rec.le("a priori ||L'(U)|| <= T ||U||", apriori, 0.0);
    rec.le("linearity of L'", lin, 1e-12);
    rec.le("parity: even U gives odd conj(L')(U)", parity, 0.0);
    rec.le("cone preservation", cone, 0.0);

    const CharGrid fine(0.5 * opt.h, opt.T, opt.R);
    const double ratio_lp = closed_form_error(grid, ops, false) / closed_form_error(fine, ops, false);
    const double ratio_lb = closed_form_error(grid, ops, true) / closed_form_error(fine, ops, true);
    rec.ge("second order: L' error ratio under h/2", ratio_lp, 3.5);
    rec.ge("second order: conj(L') error ratio under h/2", ratio_lb, 3.5);
    return out;
}

std::vector<CheckResult> run_freewave_checks(const SelftestOptions& opt)
{
    std::vector<CheckResult> out;
    Recorder rec{out, "freewave"};
    const InitialData data = make_bump_data(1.0, 0.5, opt.R);
    const FreeWave fw(data);
    const double R = opt.R;
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> xs(-2.0 * R, 2.0 * R);
    std::uniform_real_distribution<double> ts(0.0, opt.T);

    double init = 0.0, wave = 0.0, split = 0.0, support = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = xs(rng);
        init = std::max({init, std::abs(fw.u0(x, 0.0) - data.f(x)), std::abs(fw.u0_t(x, 0.0) - data.g(x)),
                         std::abs(fw.u0_x(x, 0.0) - data.df(x)), std::abs(fw.u0_tx(x, 0.0) - data.dg(x)),
                         std::abs(fw.u0_xx(x, 0.0) - data.d2f(x))});
        const double t = ts(rng);
        wave = std::max(wave, std::abs(fw.u0_tt(x, t) - fw.u0_xx(x, t)));

        // u0_t + u0_x is constant on x + t = c, u0_t - u0_x on x - t = c.
        const double c = x + t;
        const double d = x - t;
        const double s = ts(rng);
        split = std::max(split, std::abs((fw.u0_t(x, t) + fw.u0_x(x, t)) - (fw.u0_t(c - s, s) + fw.u0_x(c - s, s))));
        split = std::max(split, std::abs((fw.u0_t(x, t) - fw.u0_x(x, t)) - (fw.u0_t(d + s, s) - fw.u0_x(d + s, s))));

        const double xo = (t + R) * (1.0 + 1e-9) + std::abs(xs(rng));
        const double xf = (rng() & 1u) ? xo : -xo;
        support = std::max({support, std::abs(fw.u0(xf, t)), std::abs(fw.u0_t(xf, t)), std::abs(fw.u0_x(xf, t)), std::abs(fw.u0_tx(xf, t)),
                            std::abs(fw.u0_xx(xf, t))});
    }
    rec.le("initial values of u0 and derivatives", init, 0.0);
    rec.le("wave identity u0_tt = u0_xx", wave, 0.0);
    rec.le("d'Alembert splitting along characteristics", split, 1e-12);
    rec.le("finite propagation outside |x| <= t + R", support, 0.0);

    // Centred difference of u0_t in x against u0_tx, away from the kinks of
    // f''' and g'' at |x +- t| = R where the stencil would only be first order.
    auto fd_error = [&](double h) {
        double e = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double x = -1.5 * R + 3.0 * R * (i + 0.37) / 100.0;
            const double t = 0.01 * i * opt.T;
            if (std::abs(std::abs(x + t) - R) < 0.05 * R || std::abs(std::abs(x - t) - R) < 0.05 * R)
                continue;
            e = std::max(e, std::abs((fw.u0_t(x + h, t) - fw.u0_t(x - h, t)) / (2.0 * h) - fw.u0_tx(x, t)));
        }
        return e;
    };
    rec.ge("u0_tx matches centred difference of u0_t (order 2)", fd_error(1e-2 * R) / fd_error(5e-3 * R), 3.5);
    return out;
}

std::vector<CheckResult> run_selftest(const SelftestOptions& opt, const DuhamelOps& ops)
{
    auto out = run_duhamel_checks(opt, ops);
    auto fw = run_freewave_checks(opt);
    out.insert(out.end(), fw.begin(), fw.end());
    return out;
}

} // namespace swave
