#pragma once

#include "swave/blowup.hpp"
#include "swave/lifespan.hpp"
#include "swave/march.hpp"

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace swave {

/// Ordered key/value echo of the effective run configuration.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// Locale-independent, 17 significant digits (round-trips exactly).
std::string format_double(double v);

/// Writes "# key=value" lines, one per config entry.
void write_config_header(std::ostream& os, const ConfigEcho& config);

/// t,sup_a,sup_b,sup_u
void write_trace_csv(std::ostream& os, const ConfigEcho& config, std::span<const TraceRow> trace);
/// eps,T_obs,method,h,threshold,censored
void write_records_csv(std::ostream& os, const ConfigEcho& config,
                       std::span<const LifespanRecord> records);
/// x0,M,t0
void write_curve_csv(std::ostream& os, const ConfigEcho& config, std::span<const CurvePoint> curve);

} // namespace swave
