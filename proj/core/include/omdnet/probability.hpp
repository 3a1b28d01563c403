#pragma once

#include "omdnet/params.hpp"
#include "omdnet/patterns.hpp"

#include <cstdint>
#include <vector>

namespace omdnet {

// Probability that k specified cells of a K-cell equiprobable partition all
// receive at least one of N independent uniform points. Inclusion-exclusion
// with compensated summation; an exact rational fallback (k <= 64) kicks in
// when the alternating sum cancels below 1e-8 relative accuracy.
double occupancy_exact(std::uint64_t total_cells, std::uint64_t required_cells,
                       std::uint64_t n_points);

struct OccupancyBounds {
    double lower = 0.0;  // union bound
    double upper = 0.0;  // negative-association product bounds
};

// analytic bracket for occupancy_exact(b^(m*d), b^m, N)
OccupancyBounds occupancy_bounds(const Params& params);

enum class PatternCountMode { exact_2d, exact_enumerated, upper_bound };

struct SandwichReport {
    Params params{2, 0, 1};
    double p_target = 0.0;           // occupancy probability of one pattern
    double log_mean_count = 0.0;     // log(A * p_target), natural log
    double pz_lower = 0.0;           // Paley-Zygmund lower bound
    double markov_upper = 0.0;       // min(1, A * p_target)
    double log_pattern_count = 0.0;  // log A, natural log
    PatternCountMode count_mode = PatternCountMode::upper_bound;
    bool pz_factor_negative = false;
};

// Two-sided bound on the probability that N uniform points contain a
// (0,m,d)-net. The pattern count A is exact for d = 2, enumerated within the
// brute-force guard, and otherwise replaced by its upper bound (which keeps
// both sides valid).
SandwichReport containment_sandwich(const Params& params);

// Exact containment probability by inclusion-exclusion over the enumerated
// pattern family; guarded to families of at most 20 patterns.
double containment_exact(const Params& params);

// same computation over a family the caller already enumerated
double containment_exact(const Params& params, const std::vector<Pattern>& family);

// ceil((1+eps) * b^(m*d) * m * log b), natural logarithm
std::uint64_t sufficient_sample_count(std::uint32_t base, std::uint32_t dim,
                                      std::uint32_t order, double eps);

struct NecessaryBound {
    double value = 0.0;        // b^(m*d) / (b!)^(m(d-1)/b)
    double closed_form = 0.0;  // 2^(m + m(d-1)/2), base 2 only
    bool has_closed_form = false;
};

NecessaryBound necessary_sample_count(std::uint32_t base, std::uint32_t dim,
                                      std::uint32_t order);

struct FactorialRatioBound {
    double lhs = 0.0;  // b / (b!)^(1/b)
    double rhs = 0.0;  // exp((b - 2 - 2(log b - log 2)) / b)
};

// lhs >= rhs for every b >= 3
FactorialRatioBound factorial_ratio_bound(std::uint32_t base);

}  // namespace omdnet
