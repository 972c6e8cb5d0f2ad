#pragma once

#include "swave/initial_data.hpp"
#include "swave/nonlinearity.hpp"
#include "swave/output.hpp"

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace swave::cli {

enum ExitCode : int {
    kOk = 0,
    kNumericalFailure = 1,
    kConfigError = 2,
    kIoError = 3,
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a subcommand needs. h and T left as NaN pick a per-command
/// default in resolve().
struct RunConfig {
    std::string command;
    std::string model = "special-plus";
    double p = 2.0;
    double q = 2.0;
    double eps = 0.1;
    std::vector<double> eps_list{0.4, 0.2, 0.1, 0.05};
    std::string family = "bump";
    double amp_f = 0.0;
    double amp_g = 1.0;
    double R = 1.0;
    double h = std::numeric_limits<double>::quiet_NaN();
    double T = std::numeric_limits<double>::quiet_NaN();
    double tol = 0.0;
    int max_iter = 200;
    double threshold = 1e6;
    double M = 1.0;
    int samples = 201;
    int trials = 20;
    bool derivatives = false;
    std::string method = "march";
    std::string out;
    unsigned jobs = 1;
    std::uint64_t seed = 12345;
    std::string inject_fault;

    NonlinearityParams params() const;
    InitialData data() const;
    /// Fills unset h and T with the defaults of `command`.
    RunConfig resolve() const;
    /// Throws std::invalid_argument on the first bad field.
    void validate() const;
    ConfigEcho echo() const;
};

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_picard(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_blowup(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Resolves, validates and runs cfg.command, mapping exceptions onto exit codes.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (flags, optional --config key=value file) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace swave::cli
