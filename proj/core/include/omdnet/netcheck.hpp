#pragma once

#include "omdnet/grid.hpp"

#include <optional>

namespace omdnet {

struct NetViolation {
    bool size_mismatch = false;         // |P| != b^m
    std::uint64_t count = 0;            // points found (set size when size_mismatch)
    Composition shape;                  // violating composition, empty on size mismatch
    std::vector<std::uint64_t> offset;  // violating interval offset
};

struct NetCheckResult {
    bool ok = false;
    std::optional<NetViolation> violation;
};

// Exact (0,m,d)-net test. The witness is the first violating interval in
// lexicographic (composition, offset) order.
NetCheckResult is_net(const PointSet& points, const Params& params);

// Exact star discrepancy over the critical grid of coordinate values,
// evaluating both the open and the closed box count at every node.
// Guarded to |P| <= 256 and d <= 3.
double star_discrepancy(const PointSet& points);

}  // namespace omdnet
