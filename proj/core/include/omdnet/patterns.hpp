#pragma once

#include "omdnet/grid.hpp"
#include "omdnet/params.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace omdnet {

using Cell = std::vector<std::uint64_t>;

// b^m distinct resolution-m cells, sorted lexicographically, such that any
// placement of one point per cell is a (0,m,d)-net in base b.
struct Pattern {
    Params params{2, 0, 1};
    std::vector<Cell> cells;
};

// sorts the cells and validates the shape invariants
Pattern make_pattern(const Params& params, std::vector<Cell> cells);

struct AdmissibilityResult {
    bool admissible = true;
    Composition violating_shape;  // set when inadmissible
    std::pair<std::size_t, std::size_t> colliding_cells{0, 0};
};

// A pattern is admissible iff for every composition the induced map from
// cells to elementary intervals is injective.
AdmissibilityResult is_admissible(const Pattern& pattern);

// brute-force scale: b^(m*d) <= 4096 and b^m <= 16
bool within_enumeration_guard(const Params& params);

// all admissible patterns by backtracking over cells in lexicographic order
std::vector<Pattern> enumerate_patterns(const Params& params);

struct PatternCount {
    std::optional<boost::multiprecision::cpp_int> exact;  // present within the digit budget
    double log_value = 0.0;                               // natural log
};

// exact two-dimensional pattern count (b!)^(m * b^(m-1))
PatternCount pattern_count_exact_2d(std::uint32_t base, std::uint32_t order);

// natural log of the upper bound (b!)^(m * b^(m-1) * (d-1)); 0 for d = 1
double pattern_count_upper_log(const Params& params);

// One order-(m-1) subpattern per vertical strip plus one digit permutation
// per horizontal row; in bijection with the order-m two-dimensional patterns.
struct StripDecomposition {
    std::uint32_t base = 2;
    std::uint32_t order = 1;                        // order of the composed pattern
    std::vector<Pattern> subpatterns;               // size b, each at (b, order-1, d=2)
    std::vector<std::vector<std::uint32_t>> perms;  // size b^(order-1), each a bijection on 0..b-1
};

Pattern compose_strips(const StripDecomposition& dec);
StripDecomposition decompose_strips(const Pattern& pattern);

// keep the two named axes; the projection of an admissible pattern is an
// admissible two-dimensional pattern
Pattern project_pattern(const Pattern& pattern, std::uint32_t axis0, std::uint32_t axis1);

struct OverlapCensus {
    std::uint64_t pattern_count = 0;                 // A
    std::vector<std::uint64_t> pair_overlap_counts;  // index ell = shared cells, 0..b^m
    std::uint64_t multiplicity_min = 0;              // per-cell pattern multiplicity
    std::uint64_t multiplicity_max = 0;
    bool multiplicity_constant = true;
    std::uint64_t total_overlap = 0;                 // sum of ell * count[ell]
    double n0_lower_bound = 0.0;                     // analytic bound on the disjoint pair count
};

OverlapCensus overlap_census(const std::vector<Pattern>& family);

}  // namespace omdnet
