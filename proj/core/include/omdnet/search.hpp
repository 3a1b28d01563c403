#pragma once

#include "omdnet/grid.hpp"
#include "omdnet/patterns.hpp"

#include <map>
#include <optional>

namespace omdnet {

enum class SearchStrategy { enumerate, backtrack, automatic };

struct SearchResult {
    Pattern pattern;
    std::vector<std::size_t> point_indices;  // aligned with pattern.cells; lowest index per cell
};

// linear cell index -> indices of the points inside, in input order
std::map<std::uint64_t, std::vector<std::size_t>> occupied_cells(const PointSet& points,
                                                                 const Params& params);

// Decide whether the point set contains a (0,m,d)-net in base b as a subset
// and extract one if so. Both strategies are complete; ties break towards the
// lexicographically first pattern and the lowest point index per cell.
std::optional<SearchResult> find_net_subset(const PointSet& points, const Params& params,
                                            SearchStrategy strategy = SearchStrategy::automatic);

// Enumerate-strategy matcher against a pre-enumerated family; lets repeated
// searches (Monte Carlo trials) amortize the enumeration.
std::optional<SearchResult> find_net_subset_in_family(const std::vector<Pattern>& family,
                                                      const PointSet& points,
                                                      const Params& params);

}  // namespace omdnet
