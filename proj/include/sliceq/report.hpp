#pragma once

// JSON forms of the analysis results, shared by the CLI and the tests.

#include <optional>
#include <string>

#include "json.hpp"
#include "sliceq/experiments.hpp"
#include "sliceq/laurent.hpp"
#include "sliceq/rational.hpp"
#include "sliceq/zeros.hpp"

namespace sliceq {

using Json = nlohmann::ordered_json;

/// 15 significant digits; components below 1e-14 |q| are dropped.
std::string format_quaternion(const Quaternion& q);

Json to_json(const ZeroReport& report);
Json to_json(const SingularityReport& report);
Json to_json(const LaurentExpansion& e);
Json to_json(const DensityScanResult& result);
Json to_json(const SweepReport& report);
/// {"error": {"kind": .., "detail": .., "offset": ..}}
Json error_json(const std::string& kind, const std::string& detail, std::optional<std::size_t> offset = std::nullopt);

}  // namespace sliceq
