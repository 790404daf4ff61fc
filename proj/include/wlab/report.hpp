#pragma once
// JSON serialization of search reports. Byte-identical output for identical
// runs; elapsed_ms is excluded from the checksum.

#include <string>

#include <json.hpp>

#include "wlab/extremal.hpp"

namespace wlab {

nlohmann::json report_to_json(const SearchReport& r);
std::string report_checksum(const nlohmann::json& j);  // fnv1a-64 hex, elapsed_ms ignored

// Combine shard reports: max of maxima, union of witnesses, summed counts.
SearchReport merge_reports(const std::vector<SearchReport>& parts);
SearchReport report_from_json(const nlohmann::json& j);

}  // namespace wlab
