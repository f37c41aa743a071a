#pragma once

#include <string>

#include "qnss/nss.hpp"

namespace qnss {

/// Loads one instance bundle from a JSON file. See README for the
/// schema; expressions use the CLI grammar of the declared ring.
Instance load_instance(const std::string& path);
Instance instance_from_json_text(const std::string& text, const std::string& fallback_name);

/// Deterministic plain-text report, one verdict per line.
std::string report_text(const InstanceReport& report);
/// The same report as a JSON object (single line, sorted keys).
std::string report_json(const InstanceReport& report);

}  // namespace qnss
