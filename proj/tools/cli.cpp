#include "cli.hpp"

#include "swave/blowup.hpp"
#include "swave/lifespan.hpp"
#include "swave/march.hpp"
#include "swave/picard.hpp"
#include "swave/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

namespace swave::cli {

using Json = nlohmann::ordered_json;

namespace {

bool is_special(Variant v) { return v == Variant::SpecialPlus || v == Variant::SpecialMinus; }

Sign blowup_sign(Variant v) { return v == Variant::SpecialMinus ? Sign::Minus : Sign::Plus; }

std::string join(const std::vector<double>& values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s += ',';
        s += format_double(values[i]);
    }
    return s;
}

// Writes <out>/<name>; a no-op when no output directory was requested.
void write_output(const RunConfig& cfg, const std::string& name,
                  const std::function<void(std::ostream&)>& body)
{
    if (cfg.out.empty())
        return;
    std::error_code ec;
    std::filesystem::create_directories(cfg.out, ec);
    if (ec)
        throw IoError("cannot create " + cfg.out + ": " + ec.message());
    const auto path = std::filesystem::path(cfg.out) / name;
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot open " + path.string());
    body(os);
    os.flush();
    if (!os)
        throw IoError("write failed: " + path.string());
}

Json result_json(const RunConfig& cfg)
{
    Json j;
    j["command"] = cfg.command;
    Json config = Json::object();
    for (const auto& [key, value] : cfg.echo())
        config[key] = value;
    j["config"] = std::move(config);
    return j;
}

void write_json(const RunConfig& cfg, const Json& j)
{
    write_output(cfg, "result.json", [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

// nlohmann turns non-finite doubles into null; keep them readable instead.
Json number(double v)
{
    if (std::isfinite(v))
        return v;
    return format_double(v);
}

// Console summaries: 15 digits hides last-bit noise such as 0.1^-2 / 2.
std::string brief(double v)
{
    if (!std::isfinite(v))
        return format_double(v);
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    return ec == std::errc() ? std::string(buf, end) : format_double(v);
}

std::vector<double> times_of(std::span<const TraceRow> trace)
{
    std::vector<double> t;
    t.reserve(trace.size());
    for (const auto& row : trace)
        t.push_back(row.t);
    return t;
}

Json crossing_json(const std::optional<Crossing>& c)
{
    if (!c)
        return nullptr;
    return Json{{"t", c->t}, {"x", c->x}, {"x0", c->x0}, {"field", c->from_a ? "a" : "b"}};
}

} // namespace

NonlinearityParams RunConfig::params() const
{
    const Variant v = parse_variant(model);
    return make_params(v, p, is_special(v) ? 0.0 : q);
}

InitialData RunConfig::data() const
{
    if (family == "bump")
        return make_bump_data(amp_f, amp_g, R);
    if (family == "traveling-plus")
        return make_traveling_data(amp_f, R, Sign::Plus);
    if (family == "traveling-minus")
        return make_traveling_data(amp_f, R, Sign::Minus);
    throw std::invalid_argument("unknown data family '" + family +
                                "' (bump, traveling-plus, traveling-minus)");
}

RunConfig RunConfig::resolve() const
{
    RunConfig c = *this;
    const bool h_unset = std::isnan(h);
    const bool T_unset = std::isnan(T);
    if (command == "selftest") {
        if (h_unset)
            c.h = R / 64.0;
        if (T_unset)
            c.T = 4.0 * R;
    } else if (command == "solve") {
        if (h_unset)
            c.h = R / 128.0;
        if (T_unset)
            c.T = 10.0 * R;
    } else if (command == "picard") {
        if (h_unset)
            c.h = R / 32.0;
        if (T_unset)
            c.T = R;
        if (tol == 0.0 && std::isfinite(eps))
            c.tol = default_picard_tol(eps);
    } else if (command == "blowup") {
        if (h_unset)
            c.h = R / 256.0;
        if (T_unset) {
            const NonlinearityParams np = params();
            if (is_special(np.variant)) {
                const MStar m = eval_Mstar(data(), blowup_sign(np.variant));
                if (m.degenerate)
                    throw std::invalid_argument("data carry no blow-up amplitude; give --T");
                c.T = 2.0 * oracle_t0(m.value, eps, np.p);
            } else if (np.variant == Variant::GeneralProduct && np.lifespan_exponent() > 0.0 && eps > 0.0) {
                c.T = 10.0 * std::pow(eps, -np.lifespan_exponent());
            } else {
                throw std::invalid_argument("no default horizon for this model; give --T");
            }
        }
    } else if (command == "sweep") {
        if (h_unset)
            c.h = method == "picard" ? R / 32.0 : R / 128.0;
    }
    return c;
}

void RunConfig::validate() const
{
    const NonlinearityParams np = params();
    (void)np;
    (void)data();
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string(name) + " must be positive and finite");
    };
    if (command == "oracle") {
        positive(eps, "eps");
        return;
    }
    positive(h, "h");
    if (!(command == "sweep" && std::isnan(T)))
        positive(T, "T");
    if (!(eps >= 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("eps must be nonnegative and finite");
    if (command == "blowup")
        positive(eps, "eps");
    if (command == "sweep")
        for (double e : eps_list)
            positive(e, "every eps-list entry");
    positive(threshold, "threshold");
    if (!(tol >= 0.0))
        throw std::invalid_argument("tol must be nonnegative");
    if (max_iter < 1)
        throw std::invalid_argument("max-iter must be at least 1");
    if (jobs < 1)
        throw std::invalid_argument("jobs must be at least 1");
    if (samples < 2)
        throw std::invalid_argument("samples must be at least 2");
    if (trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (method != "march" && method != "picard")
        throw std::invalid_argument("method must be march or picard");
    if (!inject_fault.empty() && inject_fault != "lbar-sign")
        throw std::invalid_argument("unknown fault '" + inject_fault + "'");
}

ConfigEcho RunConfig::echo() const
{
    ConfigEcho e{
        {"command", command},
        {"model", model},
        {"p", format_double(p)},
        {"q", format_double(q)},
    };
    if (command == "sweep")
        e.emplace_back("eps-list", join(eps_list));
    else
        e.emplace_back("eps", format_double(eps));
    e.insert(e.end(), {
                          {"family", family},
                          {"amp-f", format_double(amp_f)},
                          {"amp-g", format_double(amp_g)},
                          {"R", format_double(R)},
                          {"h", format_double(h)},
                          {"T", format_double(T)},
                          {"tol", format_double(tol)},
                          {"max-iter", std::to_string(max_iter)},
                          {"threshold", format_double(threshold)},
                          {"M", format_double(M)},
                          {"samples", std::to_string(samples)},
                          {"trials", std::to_string(trials)},
                          {"derivatives", derivatives ? "true" : "false"},
                          {"method", method},
                          {"jobs", std::to_string(jobs)},
                          {"seed", std::to_string(seed)},
                      });
    if (!inject_fault.empty())
        e.emplace_back("inject-fault", inject_fault);
    return e;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    SelftestOptions opt;
    opt.h = cfg.h;
    opt.T = cfg.T;
    opt.R = cfg.R;
    opt.seed = cfg.seed;
    opt.random_trials = cfg.trials;
    const DuhamelOps ops =
        cfg.inject_fault == "lbar-sign" ? DuhamelOps::with_lbar_sign_fault() : DuhamelOps::standard();
    const auto checks = run_selftest(opt, ops);

    std::size_t failed = 0;
    Json list = Json::array();
    for (const auto& c : checks) {
        list.push_back({{"suite", c.suite},
                        {"name", c.name},
                        {"pass", c.pass},
                        {"measured", number(c.measured)},
                        {"bound", number(c.bound)}});
        if (c.pass)
            continue;
        if (failed++ == 0)
            out << "FAILED CHECKS\n";
        out << "  [" << c.suite << "] " << c.name << "  measured=" << brief(c.measured)
            << "  bound=" << brief(c.bound) << '\n';
    }
    out << "selftest: " << checks.size() - failed << '/' << checks.size() << " checks passed\n";

    Json j = result_json(cfg);
    j["summary"] = {{"checks", checks.size()}, {"failed", failed}};
    j["checks"] = std::move(list);
    write_json(cfg, j);
    return failed == 0 ? kOk : kNumericalFailure;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    SolveOptions so;
    so.amp_threshold = cfg.threshold;
    const SolveResult res = solve(cfg.data(), cfg.params(), cfg.eps, cfg.T, cfg.h, so);
    const TraceRow& last = res.trace().back();

    out << "solve: status=" << to_string(res.status) << " t_end=" << brief(res.t_end())
        << " sup_a=" << brief(last.sup_a) << " sup_b=" << brief(last.sup_b)
        << " sup_u=" << brief(last.sup_u);
    if (res.crossing)
        out << " x0=" << brief(res.crossing->x0);
    out << '\n';

    const ConfigEcho echo = cfg.echo();
    write_output(cfg, "trace.csv", [&](std::ostream& os) { write_trace_csv(os, echo, res.trace()); });
    Json j = result_json(cfg);
    j["summary"] = {{"status", to_string(res.status)},
                    {"t_end", res.t_end()},
                    {"levels", res.trace().size()},
                    {"sup_a", number(last.sup_a)},
                    {"sup_b", number(last.sup_b)},
                    {"sup_u", number(last.sup_u)},
                    {"crossing", crossing_json(res.crossing)}};
    write_json(cfg, j);
    return res.status == SolveStatus::Completed ? kOk : kNumericalFailure;
}

int cmd_picard(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    PicardOptions po;
    po.tol = cfg.tol;
    po.max_iter = cfg.max_iter;
    po.derivatives = cfg.derivatives;
    const PicardResult res = run(cfg.data(), cfg.params(), cfg.eps, cfg.T, cfg.h, po);
    const double last = res.residuals().empty() ? 0.0 : res.residuals().back();

    Json summary = {{"status", to_string(res.status)},
                    {"iterations", res.iterations()},
                    {"tol", res.tol},
                    {"final_residual", number(last)}};
    out << "picard: status=" << to_string(res.status) << " iterations=" << res.iterations()
        << " residual=" << brief(last) << " tol=" << brief(res.tol);
    if (res.status == PicardStatus::Converged) {
        const double xn = res.state.x_norm();
        const DerivativeConsistency dc = derivative_consistency(res.state, reconstruct_u(res.state));
        summary["x_norm"] = xn;
        summary["dt_error"] = dc.time_error;
        summary["dx_error"] = dc.space_error;
        out << " x_norm=" << brief(xn) << " dt_error=" << brief(dc.time_error);
    }
    if (res.blowup_node) {
        const auto [k, n] = *res.blowup_node;
        summary["blowup_node"] = {{"x", res.state.grid().x(k)}, {"t", res.state.grid().t(n)}};
        out << " blowup_t=" << brief(res.state.grid().t(n));
    }
    out << '\n';

    Json j = result_json(cfg);
    j["summary"] = std::move(summary);
    j["residuals"] = res.residuals();
    if (res.state.has_derivatives())
        j["derivative_residuals"] = res.state.derivative_residuals();
    write_json(cfg, j);
    return res.status == PicardStatus::Converged ? kOk : kNumericalFailure;
}

int cmd_blowup(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    const InitialData data = cfg.data();
    const NonlinearityParams np = cfg.params();
    const ConfigEcho echo = cfg.echo();
    Json summary = Json::object();

    std::optional<double> t0_oracle;
    if (is_special(np.variant)) {
        const Sign s = blowup_sign(np.variant);
        const MStar m = eval_Mstar(data, s);
        summary["M_star"] = m.value;
        summary["x_star"] = m.x;
        if (!m.degenerate) {
            t0_oracle = oracle_t0(m.value, cfg.eps, np.p);
            summary["t0_oracle"] = *t0_oracle;
        }
        const auto curve = blowup_curve(data, s, cfg.eps, np.p, cfg.samples);
        write_output(cfg, "curve.csv", [&](std::ostream& os) { write_curve_csv(os, echo, curve); });
    }

    SolveOptions so;
    so.amp_threshold = cfg.threshold;
    const SolveResult res = solve(data, np, cfg.eps, cfg.T, cfg.h, so);
    write_output(cfg, "trace.csv", [&](std::ostream& os) { write_trace_csv(os, echo, res.trace()); });
    summary["status"] = to_string(res.status);
    summary["t_end"] = res.t_end();
    summary["crossing"] = crossing_json(res.crossing);

    int rc = kOk;
    if (res.status == SolveStatus::Completed) {
        out << "blowup: no breakdown up to T=" << brief(res.t_end()) << '\n';
        rc = kNumericalFailure;
    } else {
        const auto t = times_of(res.trace());
        const auto amp = amplitude_series(res.trace(), np.variant);
        double t0 = 0.0;
        std::string method;
        try {
            const BlowupEstimate est = estimate_blowup_time(t, amp, np.riccati_exponent());
            t0 = est.t0;
            method = method_name(LifespanMethod::MarchFit);
            summary["fit_slope"] = est.slope;
            summary["fit_points"] = est.points;
        } catch (const EstimationFailure& e) {
            t0 = res.crossing ? res.crossing->t : res.t_end();
            method = method_name(LifespanMethod::MarchThreshold);
            summary["fit_failure"] = e.what();
        }
        summary["t0_estimate"] = t0;
        summary["method"] = method;
        out << "blowup: t0_estimate=" << brief(t0) << " method=" << method;
        if (t0_oracle) {
            const double rel = std::abs(t0 - *t0_oracle) / *t0_oracle;
            summary["rel_error"] = rel;
            out << " t0_oracle=" << brief(*t0_oracle) << " rel_error=" << brief(rel);
        }
        if (res.crossing)
            out << " x0=" << brief(res.crossing->x0);
        out << '\n';
    }

    Json j = result_json(cfg);
    j["summary"] = std::move(summary);
    write_json(cfg, j);
    return rc;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    const InitialData data = cfg.data();
    const NonlinearityParams np = cfg.params();
    const double T_cap = std::isnan(cfg.T) ? 0.0 : cfg.T;

    std::vector<LifespanRecord> records;
    if (cfg.method == "picard") {
        PicardSweepOptions po;
        po.h = cfg.h;
        po.T_cap = T_cap;
        po.tol = cfg.tol;
        po.max_iter = cfg.max_iter;
        po.jobs = cfg.jobs;
        records = sweep_picard(data, np, cfg.eps_list, po);
    } else {
        SweepOptions so;
        so.h = cfg.h;
        so.T_cap = T_cap;
        so.threshold = cfg.threshold;
        so.jobs = cfg.jobs;
        records = sweep(data, np, cfg.eps_list, so);
    }
    const ConfigEcho echo = cfg.echo();
    write_output(cfg, "records.csv", [&](std::ostream& os) { write_records_csv(os, echo, records); });

    Json j = result_json(cfg);
    Json recs = Json::array();
    for (const auto& r : records)
        recs.push_back({{"eps", r.eps},
                        {"T_obs", r.T_obs},
                        {"method", method_name(r.method)},
                        {"censored", r.censored}});
    j["records"] = std::move(recs);

    int rc = kOk;
    try {
        const FitReport fit = fit_exponent(records, np);
        const char* verdict = fit.exploratory ? "exploratory" : (fit.pass ? "PASS" : "FAIL");
        out << "sweep: slope=" << brief(fit.slope)
            << " expected=" << brief(fit.expected_slope)
            << " r2=" << brief(fit.r_squared) << " points=" << fit.points << ' ' << verdict
            << '\n';
        j["summary"] = {{"slope", fit.slope},
                        {"intercept", fit.intercept},
                        {"r_squared", fit.r_squared},
                        {"expected_slope", fit.expected_slope},
                        {"rel_tolerance", fit.rel_tolerance},
                        {"points", fit.points},
                        {"exploratory", fit.exploratory},
                        {"pass", fit.pass},
                        {"residuals", fit.residuals}};
        if (!fit.exploratory && !fit.pass)
            rc = kNumericalFailure;
    } catch (const InsufficientData& e) {
        out << "sweep: " << e.what() << '\n';
        j["summary"] = {{"error", e.what()}};
        rc = kNumericalFailure;
    }
    write_json(cfg, j);
    return rc;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    const NonlinearityParams np = cfg.params();
    const double t0 = oracle_t0(cfg.M, cfg.eps, np.riccati_exponent());
    out << "t0=" << brief(t0) << '\n';
    Json j = result_json(cfg);
    j["summary"] = {{"t0", number(t0)}};
    write_json(cfg, j);
    return kOk;
}

int dispatch(const RunConfig& raw, std::ostream& out, std::ostream& err)
{
    using Command = int (*)(const RunConfig&, std::ostream&, std::ostream&);
    static const std::pair<const char*, Command> table[] = {
        {"selftest", cmd_selftest}, {"solve", cmd_solve}, {"picard", cmd_picard},
        {"blowup", cmd_blowup},     {"sweep", cmd_sweep}, {"oracle", cmd_oracle},
    };
    Command cmd = nullptr;
    for (const auto& [name, fn] : table)
        if (raw.command == name)
            cmd = fn;
    if (!cmd) {
        err << "config error: unknown command '" << raw.command << "'\n";
        return kConfigError;
    }

    RunConfig cfg;
    try {
        cfg = raw.resolve();
        cfg.validate();
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    try {
        return cmd(cfg, out, err);
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Blow-up and lifespan experiments for 1D semilinear wave equations", "swave"};
    // --h is the lattice spacing, so help is long-form only.
    app.set_help_flag("--help", "print this help and exit");
    app.set_config("--config", "", "key=value file; flags given on the command line win");
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--model", cfg.model, "general | special-plus | special-minus | linear")
        ->capture_default_str();
    app.add_option("--p", cfg.p, "exponent on u_t (all models)")->capture_default_str();
    app.add_option("--q", cfg.q, "exponent on u_x (general model)")->capture_default_str();
    app.add_option("--eps", cfg.eps, "data amplitude")->capture_default_str();
    app.add_option("--eps-list", cfg.eps_list, "sweep amplitudes")->delimiter(',')->capture_default_str();
    app.add_option("--family", cfg.family, "bump | traveling-plus | traveling-minus")
        ->capture_default_str();
    app.add_option("--amp-f", cfg.amp_f, "peak of f")->capture_default_str();
    app.add_option("--amp-g", cfg.amp_g, "peak of g (bump family)")->capture_default_str();
    app.add_option("--R", cfg.R, "support radius, >= 1")->capture_default_str();
    app.add_option("--h", cfg.h, "lattice spacing (default depends on command)");
    app.add_option("--T", cfg.T, "final time (default depends on command)");
    app.add_option("--tol", cfg.tol, "Picard tolerance, 0 = 1e-10 max(eps, 1)")->capture_default_str();
    app.add_option("--max-iter", cfg.max_iter, "Picard iteration cap")->capture_default_str();
    app.add_option("--threshold", cfg.threshold, "amplitude that ends a march")->capture_default_str();
    app.add_option("--M", cfg.M, "characteristic amplitude for oracle")->capture_default_str();
    app.add_option("--samples", cfg.samples, "points on the blow-up curve")->capture_default_str();
    app.add_option("--trials", cfg.trials, "random functions per selftest property")
        ->capture_default_str();
    app.add_flag("--derivatives", cfg.derivatives, "also iterate (v_x, w_x) in picard");
    app.add_option("--method", cfg.method, "sweep breakdown method: march | picard")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "directory for CSV/JSON outputs");
    app.add_option("--jobs", cfg.jobs, "worker threads for sweeps")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--inject-fault", cfg.inject_fault)->group("");

    app.add_subcommand("selftest", "operator and free-wave invariant suites");
    app.add_subcommand("solve", "characteristic march, writes the amplitude trace");
    app.add_subcommand("picard", "space-time Picard iteration");
    app.add_subcommand("blowup", "march to breakdown and estimate the blow-up time");
    app.add_subcommand("sweep", "lifespan sweep over eps and exponent fit");
    app.add_subcommand("oracle", "closed-form blow-up time (M eps)^(1-p)/(p-1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kConfigError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return dispatch(cfg, out, err);
}

} // namespace swave::cli
