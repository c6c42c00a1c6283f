#pragma once

#include <string>

#include <json.hpp>

#include "liouville/action.hpp"
#include "liouville/search.hpp"
#include "liouville/walks.hpp"

namespace liouville {

using Json = nlohmann::json;

// Dyadics travel as canonical "num/2^exp" text and rationals as "p/q", so
// every artifact round-trips exactly.

Json to_json(const PLMap& g);
PLMap plmap_from_json(const Json& j);

Json to_json(const PointSet& x);
PointSet point_set_from_json(const Json& j);

Json to_json(const CoFolnerCertificate& cert);
CoFolnerCertificate certificate_from_json(const Json& j);

Json to_json(const SearchResult& result);
SearchResult search_result_from_json(const Json& j);

Json to_json(const EmpiricalDistribution& d, const std::string& measure_description);

/// Stable text form used for every artifact written to disk.
std::string dump(const Json& j);

}  // namespace liouville
