#include "omdnet/experiments.hpp"

#include "omdnet/constructions.hpp"
#include "omdnet/probability.hpp"
#include "omdnet/rng.hpp"
#include "omdnet/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <thread>

namespace omdnet {

namespace {

// the pattern family is enumerated once and shared read-only by all trials
std::uint64_t run_trials(const Params& params, const std::vector<Pattern>* family,
                         std::uint64_t begin, std::uint64_t end, std::uint64_t master_seed) {
    std::uint64_t wins = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
        const std::uint64_t seed = rng::substream(master_seed, t);
        const PointSet points = sample_uniform(params, seed, params.n_points);
        const auto hit = family ? find_net_subset_in_family(*family, points, params)
                                : find_net_subset(points, params, SearchStrategy::backtrack);
        if (hit) ++wins;
    }
    return wins;
}

void wilson_interval(std::uint64_t successes, std::uint64_t trials, double& low, double& high) {
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    high = successes == trials ? 1.0 : std::min(1.0, center + half);
}

std::string format_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

ExperimentRecord estimate_containment(const Params& params, std::uint64_t trials,
                                      std::uint64_t master_seed, unsigned threads) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (threads == 0) threads = 1;

    std::optional<std::vector<Pattern>> family;
    if (within_enumeration_guard(params)) family = enumerate_patterns(params);
    const std::vector<Pattern>* family_ptr = family ? &*family : nullptr;

    std::uint64_t successes = 0;
    if (threads == 1 || trials < 2 * threads) {
        successes = run_trials(params, family_ptr, 0, trials, master_seed);
    } else {
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const std::uint64_t chunk = (trials + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = std::min<std::uint64_t>(trials, t * chunk);
            const std::uint64_t end = std::min<std::uint64_t>(trials, begin + chunk);
            pool.emplace_back([&, t, begin, end] {
                partial[t] = run_trials(params, family_ptr, begin, end, master_seed);
            });
        }
        for (auto& th : pool) th.join();
        for (std::uint64_t w : partial) successes += w;
    }

    ExperimentRecord rec;
    rec.params = params;
    rec.trials = trials;
    rec.successes = successes;
    rec.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
    wilson_interval(successes, trials, rec.ci_low, rec.ci_high);
    rec.master_seed = master_seed;

    const SandwichReport sandwich = containment_sandwich(params);
    rec.pz_lower = sandwich.pz_lower;
    rec.markov_upper = sandwich.markov_upper;
    if (family && family->size() <= 20) rec.exact = containment_exact(params, *family);
    return rec;
}

SweepResult sweep(const Params& base_params, const std::vector<std::uint64_t>& n_list,
                  std::uint64_t trials, std::uint64_t master_seed, double eps,
                  unsigned threads) {
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw std::invalid_argument("the N list must be strictly increasing");

    SweepResult result;
    result.records.reserve(n_list.size());
    for (std::uint64_t n : n_list)
        result.records.push_back(
            estimate_containment(base_params.with_points(n), trials, master_seed, threads));

    result.sufficient_n = (1.0 + eps) * static_cast<double>(base_params.total_cells) *
                          static_cast<double>(base_params.order) *
                          std::log(static_cast<double>(base_params.base));
    result.necessary_n =
        necessary_sample_count(base_params.base, base_params.dim, base_params.order).value;

    auto nearest = [&](double target) -> std::optional<std::size_t> {
        if (n_list.empty()) return std::nullopt;
        std::size_t best = 0;
        for (std::size_t i = 1; i < n_list.size(); ++i)
            if (std::fabs(static_cast<double>(n_list[i]) - target) <
                std::fabs(static_cast<double>(n_list[best]) - target))
                best = i;
        return best;
    };
    result.nearest_sufficient = nearest(result.sufficient_n);
    result.nearest_necessary = nearest(result.necessary_n);
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out =
        "b,m,d,N,trials,successes,p_hat,ci_low,ci_high,pz_lower,markov_upper,exact,seed\n";
    for (const ExperimentRecord& r : result.records) {
        out += std::to_string(r.params.base) + ',' + std::to_string(r.params.order) + ',' +
               std::to_string(r.params.dim) + ',' + std::to_string(r.params.n_points) + ',' +
               std::to_string(r.trials) + ',' + std::to_string(r.successes) + ',' +
               format_sig12(r.p_hat) + ',' + format_sig12(r.ci_low) + ',' +
               format_sig12(r.ci_high) + ',' + format_sig12(r.pz_lower) + ',' +
               format_sig12(r.markov_upper) + ',' +
               (r.exact ? format_sig12(*r.exact) : std::string()) + ',' +
               std::to_string(r.master_seed) + '\n';
    }
    return out;
}

}  // namespace omdnet
