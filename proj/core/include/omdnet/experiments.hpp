#pragma once

#include "omdnet/params.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace omdnet {

struct ExperimentRecord {
    Params params{2, 0, 1};
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;  // 95% Wilson interval
    double ci_high = 0.0;
    double pz_lower = 0.0;
    double markov_upper = 0.0;
    std::optional<double> exact;  // set when the brute-force family is small enough
    std::uint64_t master_seed = 0;
};

// Seeded Monte Carlo estimate of the probability that N uniform points
// contain a (0,m,d)-net. Trial i draws its points from the substream
// (master_seed, i), so the record is bit-identical across runs and across
// any number of threads.
ExperimentRecord estimate_containment(const Params& params, std::uint64_t trials,
                                      std::uint64_t master_seed, unsigned threads = 1);

struct SweepResult {
    std::vector<ExperimentRecord> records;
    double sufficient_n = 0.0;
    double necessary_n = 0.0;
    std::optional<std::size_t> nearest_sufficient;  // row closest to sufficient_n
    std::optional<std::size_t> nearest_necessary;   // row closest to necessary_n
};

// one record per entry of the strictly increasing N list
SweepResult sweep(const Params& base_params, const std::vector<std::uint64_t>& n_list,
                  std::uint64_t trials, std::uint64_t master_seed, double eps = 0.0,
                  unsigned threads = 1);

// header: b,m,d,N,trials,successes,p_hat,ci_low,ci_high,pz_lower,markov_upper,exact,seed
// floats with 12 significant digits; "exact" empty when unavailable
std::string sweep_csv(const SweepResult& result);

}  // namespace omdnet
