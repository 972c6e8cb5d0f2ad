#pragma once

#include "swave/grid.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace swave {

/// The operator family the invariant suite is run against. Tests swap in
/// faulty members to make sure the suite notices.
struct DuhamelOps {
    std::function<GridFn(const GridFn&)> lprime;
    std::function<GridFn(const GridFn&)> lbar;
    std::function<GridFn(const GridFn&)> l;

    static DuhamelOps standard();
    /// conj(L') with the minus sign flipped: (P + Q) / 2.
    static DuhamelOps with_lbar_sign_fault();
};

struct SelftestOptions {
    double h = 1.0 / 64.0;
    double T = 4.0;
    double R = 1.0;
    std::uint64_t seed = 12345;
    int random_trials = 20;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass;
    double measured;
    double bound;
};

std::vector<CheckResult> run_duhamel_checks(const SelftestOptions& opt, const DuhamelOps& ops);
std::vector<CheckResult> run_freewave_checks(const SelftestOptions& opt);
std::vector<CheckResult> run_selftest(const SelftestOptions& opt,
                                      const DuhamelOps& ops = DuhamelOps::standard());

} // namespace swave
