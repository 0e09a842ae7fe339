#pragma once

#include <string>

#include <json.hpp>

#include "kprod/report.hpp"

namespace kprod {

/// JSON-lines schema, keys in this order:
///   {"check_name": str,
///    "inputs": {"graph6": [str...], "n": int|null, "S": [int...], "seed": uint|null},
///    "computed": {name: int|bool, ...}   (keys sorted),
///    "verdict": "pass"|"fail",
///    "elapsed_ms": int}
nlohmann::ordered_json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

/// One compact JSON object, no trailing newline.
std::string to_json_line(const VerificationReport& report);

/// Re-runs the check named in `report` from its own inputs. Witness checks
/// regenerate the witness; every other check reuses the stored separator.
VerificationReport recheck(const VerificationReport& report);

}  // namespace kprod
