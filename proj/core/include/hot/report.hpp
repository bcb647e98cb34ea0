#pragma once

#include <span>
#include <string>

#include "hot/metrics.hpp"

namespace hot {

/// Report as pretty-printed JSON with sorted keys and a trailing newline.
/// Undefined values are null, with the reason alongside.
std::string report_json(const EvalReport& report);

/// Aligned plain-text table, one row per report, with the columns
/// Method | Effort Ratio | Number of Hyperedges | RDP. Values use three
/// decimals; undefined values print as "n/a".
std::string report_table(std::span<const EvalReport> reports);

}  // namespace hot
