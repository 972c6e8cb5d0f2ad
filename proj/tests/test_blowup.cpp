#include "oracles.hpp"

#include "swave/blowup.hpp"
#include "swave/march.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace swave;

namespace {

// Amplitudes of the closed-form solution sampled on [0, t_end] with step dt.
void synthetic_trace(double M, double eps, double p, double t_end, double dt, std::vector<double>& t,
                     std::vector<double>& amp)
{
    t.clear();
    amp.clear();
    for (int n = 0; n * dt <= t_end; ++n) {
        t.push_back(n * dt);
        amp.push_back(std::abs(oracle_U(M, eps, p, n * dt)));
    }
}

} // namespace

TEST_SUITE("blowup") {

TEST_CASE("closed-form blow-up times")
{
    CHECK(oracle_t0(1.0, 0.1, 3.0) == doctest::Approx(50.0).epsilon(1e-14));
    CHECK(oracle_t0(2.0, 1.0, 2.0) == 0.5);
    CHECK(oracle_t0(-1.0, 0.1, 3.0) == oracle_t0(1.0, 0.1, 3.0));
    CHECK(oracle_t0(0.0, 0.1, 3.0) == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(oracle_t0(1.0, 0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(oracle_t0(1.0, 0.0, 2.0), std::invalid_argument);
}

TEST_CASE("closed-form solution")
{
    CHECK(oracle_U(1.0, 1.0, 2.0, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(oracle_U(0.7, 0.3, 2.5, 0.0) == doctest::Approx(0.21).epsilon(1e-15));
    CHECK(oracle_U(-1.0, 1.0, 2.0, 0.5) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK_THROWS_AS(oracle_U(1.0, 1.0, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(oracle_U(1.0, 1.0, 2.0, -0.1), std::domain_error);
    double prev = 0.0;
    for (double t = 0.0; t < 1.0; t += 0.01) {
        const double u = oracle_U(1.0, 1.0, 2.0, t);
        CHECK(u > prev);
        prev = u;
    }
}

TEST_CASE("closed form against RK4")
{
    for (double p : {1.5, 2.0, 3.0}) {
        const double t0 = oracle_t0(1.0, 0.5, p);
        const double t = 0.8 * t0;
        CHECK(oracle_U(1.0, 0.5, p, t) == doctest::Approx(oracle::rk4_riccati(0.5, p, t, 20000)).epsilon(1e-9));
    }
}

TEST_CASE("closed form satisfies the ODE to second order")
{
    const double p = 2.5, t = 0.5;
    auto err = [&](double h) {
        const double d = (oracle_U(1.0, 0.8, p, t + h) - oracle_U(1.0, 0.8, p, t - h)) / (2 * h);
        return std::abs(d - std::pow(oracle_U(1.0, 0.8, p, t), p));
    };
    CHECK(err(1e-2) / err(5e-3) >= 3.5);
}

TEST_CASE("scaling and monotonicity")
{
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> lam(0.1, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double l = lam(rng);
        CHECK(oracle_t0(1.3, l * 0.2, 2.5) == doctest::Approx(std::pow(l, -1.5) * oracle_t0(1.3, 0.2, 2.5)).epsilon(1e-13));
    }
    CHECK(oracle_t0(2.0, 0.1, 2.0) < oracle_t0(1.0, 0.1, 2.0));
    CHECK(oracle_t0(1.0, 0.2, 2.0) < oracle_t0(1.0, 0.1, 2.0));
}

TEST_CASE("estimator inverts the closed form")
{
    std::vector<double> t, amp;
    for (double p : {1.5, 2.0, 3.0}) {
        const double t0 = oracle_t0(1.0, 0.5, p);
        synthetic_trace(1.0, 0.5, p, 0.999 * t0, t0 / 4096, t, amp);
        const BlowupEstimate e = estimate_blowup_time(t, amp, p);
        CHECK(std::abs(e.t0 - t0) / t0 <= 1e-8);
        CHECK(e.slope == doctest::Approx(-(p - 1.0)).epsilon(1e-8));
    }
}

TEST_CASE("estimator refuses traces without a blow-up signal")
{
    std::vector<double> t(100), flat(100, 1.0);
    for (int i = 0; i < 100; ++i)
        t[static_cast<std::size_t>(i)] = 0.01 * i;
    CHECK_THROWS_AS(estimate_blowup_time(t, flat, 2.0), EstimationFailure);
    std::vector<double> bad_t{0.0, 1.0}, bad_a{1.0, 100.0};
    CHECK_THROWS_AS(estimate_blowup_time(bad_t, bad_a, 2.0), EstimationFailure);
}

TEST_CASE("blow-up curve")
{
    const auto bump = make_bump_data(0.0, 1.0, 1.0);
    const auto curve = blowup_curve(bump, Sign::Plus, 0.25, 2.0, 201);
    REQUIRE_FALSE(curve.empty());
    const auto best = std::min_element(curve.begin(), curve.end(),
                                       [](const CurvePoint& a, const CurvePoint& b) { return a.t0 < b.t0; });
    CHECK(best->x0 == 0.0);
    CHECK(best->t0 == oracle_t0(1.0, 0.25, 2.0));
    for (const auto& c : curve)
        CHECK(c.t0 == doctest::Approx(oracle_t0(c.M, 0.25, 2.0)).epsilon(1e-15));
    // the support endpoints have M = 0 and are left out
    CHECK(curve.size() == 199);

    CHECK(blowup_curve(make_traveling_data(1.0, 1.0, Sign::Plus), Sign::Plus, 0.25, 2.0, 101).empty());
}

TEST_CASE("earliest point of the curve against the march")
{
    const auto data = make_bump_data(0.0, 1.0, 1.0);
    const auto curve = blowup_curve(data, Sign::Plus, 0.5, 2.0, 101);
    double t_min = std::numeric_limits<double>::infinity();
    for (const auto& c : curve)
        t_min = std::min(t_min, c.t0);
    const auto r = solve(data, make_params(Variant::SpecialPlus, 2.0), 0.5, 10.0, 1.0 / 256);
    REQUIRE(r.crossing.has_value());
    CHECK(r.crossing->t == doctest::Approx(t_min).epsilon(0.02));
}

TEST_CASE("march estimate for p = 2, eps = 0.25")
{
    const auto r = solve(make_bump_data(0.0, 1.0, 1.0), make_params(Variant::SpecialPlus, 2.0), 0.25, 10.0, 1.0 / 1024);
    std::vector<double> t;
    for (const auto& row : r.trace())
        t.push_back(row.t);
    const auto e = estimate_blowup_time(t, amplitude_series(r.trace(), Variant::SpecialPlus), 2.0);
    CHECK(e.t0 == doctest::Approx(4.0).epsilon(0.02));
}

}
