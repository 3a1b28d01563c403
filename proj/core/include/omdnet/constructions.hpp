#pragma once

#include "omdnet/grid.hpp"

namespace omdnet {

bool is_prime(std::uint32_t n);

// Digital (0,m,d)-net in a prime base with exact base-b coordinates: the
// first d-1 axes are Pascal-matrix digit scrambles of the radical-inverse
// digit vector, the last axis is i/b^m. Valid for 1 <= d <= b+1.
PointSet generate_net(std::uint32_t base, std::uint32_t order, std::uint32_t dim);

// `count` i.i.d. uniform points in [0,1)^d from a counter-based stream;
// identical (seed, count, d) always produce identical output.
PointSet sample_uniform(const Params& params, std::uint64_t seed, std::uint64_t count);

}  // namespace omdnet
