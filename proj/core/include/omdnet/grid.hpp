#pragma once

#include "omdnet/params.hpp"

#include <cstdint>
#include <vector>

namespace omdnet {

// d non-negative entries summing to the order m
using Composition = std::vector<std::uint32_t>;

// Axis-parallel box  prod_j [ offset[j]/b^shape[j], (offset[j]+1)/b^shape[j] )
struct ElementaryInterval {
    Composition shape;
    std::vector<std::uint64_t> offset;  // 0 <= offset[j] < b^shape[j]
};

// numerator / base^exponent
struct ExactCoord {
    std::uint64_t numerator = 0;
    std::uint32_t exponent = 0;
};

struct Point {
    std::vector<double> coords;    // each in [0,1)
    std::vector<ExactCoord> exact; // empty, or one entry per coordinate
};

struct PointSet {
    std::uint32_t dim = 1;
    std::vector<Point> points;
};

struct CellIndex {
    std::vector<std::uint64_t> a;  // per-axis index in [0, b^resolution)
    std::uint32_t resolution = 0;
};

// throws std::overflow_error when the coefficient exceeds 64 bits
std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k);

// All d-vectors of non-negative integers summing to m, ascending lexicographic.
// Count is binomial(m+d-1, d-1); a count overflowing 64 bits is rejected.
std::vector<Composition> compositions(std::uint32_t m, std::uint32_t d);

// Checks dimensions, coordinate ranges, and, where exact forms are present,
// that numerator/base^exponent matches the float coordinate to one ulp.
void validate_point_set(const PointSet& points, std::uint32_t base);

// Resolution-m cell containing p. Uses integer digit arithmetic when the
// exact form is present, floor(x * b^m) clamped to b^m - 1 otherwise.
CellIndex cell_of_point(const Point& p, const Params& params);

// The elementary interval of the given composition that contains the cell.
ElementaryInterval interval_of_cell(const CellIndex& cell, const Composition& shape,
                                    const Params& params);

// row-major flattening of a cell index, axis 0 most significant
std::uint64_t linear_cell_index(const CellIndex& cell, const Params& params);
CellIndex cell_from_linear(std::uint64_t index, const Params& params);

}  // namespace omdnet
