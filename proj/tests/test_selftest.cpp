#include "swave/selftest.hpp"

#include <doctest.h>

#include <algorithm>

using namespace swave;

TEST_SUITE("selftest") {

TEST_CASE("the standard operators pass every check")
{
    const auto checks = run_selftest(SelftestOptions{});
    REQUIRE(checks.size() >= 10);
    for (const auto& c : checks) {
        INFO(c.suite, ": ", c.name, " measured ", c.measured, " bound ", c.bound);
        CHECK(c.pass);
    }
}

TEST_CASE("a flipped sign in conj(L') is caught by domination")
{
    const auto checks = run_duhamel_checks(SelftestOptions{}, DuhamelOps::with_lbar_sign_fault());
    const auto dom = std::find_if(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.name.find("domination") != std::string::npos;
    });
    REQUIRE(dom != checks.end());
    CHECK_FALSE(dom->pass);
}

TEST_CASE("seed changes the random functions but not the verdicts")
{
    SelftestOptions a, b;
    b.seed = 99;
    const auto ca = run_duhamel_checks(a, DuhamelOps::standard());
    const auto cb = run_duhamel_checks(b, DuhamelOps::standard());
    REQUIRE(ca.size() == cb.size());
    for (std::size_t i = 0; i < ca.size(); ++i)
        CHECK(ca[i].pass == cb[i].pass);
}

}
