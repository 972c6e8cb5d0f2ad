#include "swave/output.hpp"

#include <charconv>
#include <cmath>

namespace swave {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc())
        return "nan";
    return std::string(buf, end);
}

void write_config_header(std::ostream& os, const ConfigEcho& config)
{
    for (const auto& [key, value] : config)
        os << "# " << key << '=' << value << '\n';
}

void write_trace_csv(std::ostream& os, const ConfigEcho& config, std::span<const TraceRow> trace)
{
    write_config_header(os, config);
    os << "t,sup_a,sup_b,sup_u\n";
    for (const auto& r : trace)
        os << format_double(r.t) << ',' << format_double(r.sup_a) << ',' << format_double(r.sup_b)
           << ',' << format_double(r.sup_u) << '\n';
}

void write_records_csv(std::ostream& os, const ConfigEcho& config,
                       std::span<const LifespanRecord> records)
{
    write_config_header(os, config);
    os << "eps,T_obs,method,h,threshold,censored\n";
    for (const auto& r : records)
        os << format_double(r.eps) << ',' << format_double(r.T_obs) << ',' << method_name(r.method)
           << ',' << format_double(r.h) << ',' << format_double(r.threshold) << ','
           << (r.censored ? 1 : 0) << '\n';
}

void write_curve_csv(std::ostream& os, const ConfigEcho& config, std::span<const CurvePoint> curve)
{
    write_config_header(os, config);
    os << "x0,M,t0\n";
    for (const auto& c : curve)
        os << format_double(c.x0) << ',' << format_double(c.M) << ',' << format_double(c.t0) << '\n';
}

} // namespace swave
