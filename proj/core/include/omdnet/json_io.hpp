#pragma once

#include "omdnet/experiments.hpp"
#include "omdnet/grid.hpp"
#include "omdnet/netcheck.hpp"
#include "omdnet/patterns.hpp"
#include "omdnet/probability.hpp"
#include "omdnet/search.hpp"

#include "json.hpp"

#include <optional>

namespace omdnet {

using Json = nlohmann::ordered_json;

// {"d":2,"b":2,"m":2,"points":[[x,y],...],"exact":[[[num,exp],...],...]}
// b, m, exact are optional
Json point_set_to_json(const PointSet& points, const Params* params = nullptr);
PointSet point_set_from_json(const Json& j);
std::optional<std::uint32_t> base_hint_from_json(const Json& j);
std::optional<std::uint32_t> order_hint_from_json(const Json& j);

// {"b":2,"m":1,"d":2,"cells":[[0,0],[1,1]]}
Json pattern_to_json(const Pattern& pattern);
Pattern pattern_from_json(const Json& j);

Json net_check_to_json(const NetCheckResult& result);
Json census_to_json(const OverlapCensus& census, const Params& params);
Json sandwich_to_json(const SandwichReport& report);

// {"found":true,"pattern":[[...]],"point_indices":[...]}
Json search_result_to_json(const std::optional<SearchResult>& result);

Json record_to_json(const ExperimentRecord& record);

}  // namespace omdnet
