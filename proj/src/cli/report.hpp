#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cesaro/ergodic.hpp"
#include "cesaro/finite_type.hpp"
#include "cesaro/spectrum.hpp"
#include "cesaro/suites.hpp"
#include "config.hpp"

namespace cesaro::cli {

using Json = nlohmann::ordered_json;

/// Finite values as numbers, non-finite ones as "inf", "-inf", "nan".
Json num(double x);
Json to_json(Complex z);
Json to_json(const GrowthVerdict& v);
Json to_json(const ProbeVerdict& v);
Json to_json(const SpectralReport& r);
Json to_json(const SuiteReport& r);
Json to_json(const FtVerdict& v);
Json to_json(const FtActsReport& r);

/// {schema, tool_version, config_hash, horizon, N, config}.
Json header_json(const RunConfig& cfg, std::optional<Index> horizon, std::optional<Index> N);
/// Same fields as '# key=value' lines.
std::string header_comment(const RunConfig& cfg, std::optional<Index> horizon, std::optional<Index> N);

}  // namespace cesaro::cli
