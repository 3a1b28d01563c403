#include "omdnet/probability.hpp"

#include "omdnet/errors.hpp"
#include "omdnet/patterns.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace omdnet {

namespace {

double pow_u64(double x, std::uint64_t e) {
    double r = 1.0, p = x;
    while (e) {
        if (e & 1) r *= p;
        p *= p;
        e >>= 1;
    }
    return r;
}

struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

double occupancy_rational(std::uint64_t total, std::uint64_t k, std::uint64_t n) {
    using boost::multiprecision::cpp_bin_float_50;
    using boost::multiprecision::cpp_int;
    if (n > std::numeric_limits<unsigned>::max())
        throw std::runtime_error("rational occupancy fallback is limited to N < 2^32");
    const auto exp_n = static_cast<unsigned>(n);
    cpp_int numerator = 0;
    cpp_int binom = 1;
    for (std::uint64_t i = 0; i <= k; ++i) {
        const cpp_int term = binom * boost::multiprecision::pow(cpp_int(total - i), exp_n);
        numerator += (i % 2 == 0) ? term : -term;
        binom = binom * cpp_int(k - i) / cpp_int(i + 1);
    }
    const cpp_int denominator = boost::multiprecision::pow(cpp_int(total), exp_n);
    const cpp_bin_float_50 ratio = cpp_bin_float_50(numerator) / cpp_bin_float_50(denominator);
    return ratio.convert_to<double>();
}

}  // namespace

double occupancy_exact(std::uint64_t total_cells, std::uint64_t required_cells,
                       std::uint64_t n_points) {
    const std::uint64_t total = total_cells;
    const std::uint64_t k = required_cells;
    if (k < 1 || k > total)
        throw std::invalid_argument("required cells must satisfy 1 <= k <= total");
    if (n_points < k) return 0.0;

    NeumaierSum acc;
    double abs_sum = 0.0;
    if (k <= 64) {
        std::uint64_t binom = 1;  // C(k, i), exact through C(64, 32)
        for (std::uint64_t i = 0; i <= k; ++i) {
            const double base = 1.0 - static_cast<double>(i) / static_cast<double>(total);
            const double term = static_cast<double>(binom) * pow_u64(base, n_points);
            acc.add((i % 2 == 0) ? term : -term);
            abs_sum += term;
            binom = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(binom) * (k - i) / (i + 1));
        }
    } else {
        // magnitudes in log space, normalized by the largest term
        std::vector<double> log_terms(k + 1);
        double log_binom = 0.0;
        double max_log = -std::numeric_limits<double>::infinity();
        for (std::uint64_t i = 0; i <= k; ++i) {
            log_terms[i] = log_binom +
                           static_cast<double>(n_points) *
                               std::log1p(-static_cast<double>(i) / static_cast<double>(total));
            max_log = std::max(max_log, log_terms[i]);
            if (i < k)
                log_binom += std::log(static_cast<double>(k - i)) -
                             std::log(static_cast<double>(i + 1));
        }
        for (std::uint64_t i = 0; i <= k; ++i) {
            const double term = std::exp(log_terms[i] - max_log);
            acc.add((i % 2 == 0) ? term : -term);
            abs_sum += term;
        }
        const double scale = std::exp(max_log);
        const double value = acc.value() * scale;
        abs_sum *= scale;
        if (std::fabs(value) < 1e-8 * abs_sum)
            throw std::runtime_error(
                "occupancy sum cancels below tolerance and the rational fallback "
                "is limited to k <= 64");
        return std::clamp(value, 0.0, 1.0);
    }

    double value = acc.value();
    if (std::fabs(value) < 1e-8 * abs_sum) value = occupancy_rational(total, k, n_points);
    return std::clamp(value, 0.0, 1.0);
}

OccupancyBounds occupancy_bounds(const Params& params) {
    const double cells = static_cast<double>(params.cells_per_axis);
    const double total = static_cast<double>(params.total_cells);
    const double n = static_cast<double>(params.n_points);

    OccupancyBounds out;
    out.lower = std::clamp(1.0 - cells * std::exp(-n / total), 0.0, 1.0);
    if (params.n_points == 0) {
        out.upper = 0.0;
        return out;
    }
    const double miss = std::exp(n * std::log1p(-1.0 / total));  // (1 - 1/T)^N
    const double product_bound = std::exp(cells * std::log1p(-miss));
    const double crude_bound = std::exp(cells * (std::log(n) - std::log(total)));
    out.upper = std::clamp(std::min(product_bound, crude_bound), 0.0, 1.0);
    return out;
}

SandwichReport containment_sandwich(const Params& params) {
    SandwichReport rep;
    rep.params = params;

    double log_a = 0.0;
    if (params.dim == 1) {
        // exactly one admissible pattern in dimension 1
        rep.count_mode = PatternCountMode::exact_enumerated;
    } else if (params.dim == 2) {
        log_a = pattern_count_exact_2d(params.base, params.order).log_value;
        rep.count_mode = PatternCountMode::exact_2d;
    } else if (within_enumeration_guard(params)) {
        log_a = std::log(static_cast<double>(enumerate_patterns(params).size()));
        rep.count_mode = PatternCountMode::exact_enumerated;
    } else {
        log_a = pattern_count_upper_log(params);
        rep.count_mode = PatternCountMode::upper_bound;
    }
    rep.log_pattern_count = log_a;

    const double p = occupancy_exact(params.total_cells, params.cells_per_axis,
                                     params.n_points);
    rep.p_target = p;
    if (p <= 0.0) {
        rep.pz_lower = 0.0;
        rep.markov_upper = 0.0;
        rep.log_mean_count = -std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.log_mean_count = log_a + std::log(p);

    if (rep.log_mean_count >= 0.0)
        rep.markov_upper = 1.0;
    else if (log_a < 700.0)
        rep.markov_upper = std::min(1.0, std::exp(log_a) * p);
    else
        rep.markov_upper = std::exp(rep.log_mean_count);

    double factor;
    if (params.dim == 1) {
        factor = 1.0;  // b^m - (b^m - 1), exact since A = 1
    } else {
        const double shrink = std::exp(-static_cast<double>(params.order) *
                                       (static_cast<double>(params.dim) - 2.0) *
                                       std::log(static_cast<double>(params.base)));
        const double cells = static_cast<double>(params.cells_per_axis);
        const double pair_ratio =
            (cells <= 1.0) ? 0.0 : std::exp(std::log(cells - 1.0) - log_a);
        factor = shrink - pair_ratio;
    }
    if (factor < 0.0) {
        rep.pz_factor_negative = true;
        rep.pz_lower = 0.0;
    } else {
        rep.pz_lower = 1.0 / (1.0 + (1.0 / p - 1.0) * factor);
    }
    return rep;
}

double containment_exact(const Params& params) {
    return containment_exact(params, enumerate_patterns(params));
}

double containment_exact(const Params& params, const std::vector<Pattern>& family) {
    const std::size_t count = family.size();
    if (count > 20)
        throw size_guard_error("inclusion-exclusion is limited to families with A <= 20");
    if (count == 0) return 0.0;

    const std::size_t words = (params.total_cells + 63) / 64;
    std::vector<std::vector<std::uint64_t>> masks(count, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < count; ++i)
        for (const Cell& c : family[i].cells) {
            const std::uint64_t t = linear_cell_index(CellIndex{c, params.order}, params);
            masks[i][t / 64] |= std::uint64_t(1) << (t % 64);
        }

    std::map<std::uint64_t, double> occupancy_memo;
    auto union_probability = [&](std::uint64_t union_cells) {
        auto it = occupancy_memo.find(union_cells);
        if (it == occupancy_memo.end())
            it = occupancy_memo
                     .emplace(union_cells, occupancy_exact(params.total_cells, union_cells,
                                                           params.n_points))
                     .first;
        return it->second;
    };

    NeumaierSum acc;
    std::vector<std::vector<std::uint64_t>> scratch(count + 1,
                                                    std::vector<std::uint64_t>(words, 0));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t depth) {
        for (std::size_t i = start; i < count; ++i) {
            std::uint64_t cells_in_union = 0;
            for (std::size_t w = 0; w < words; ++w) {
                scratch[depth + 1][w] = scratch[depth][w] | masks[i][w];
                cells_in_union += std::popcount(scratch[depth + 1][w]);
            }
            const double p = union_probability(cells_in_union);
            acc.add(depth % 2 == 0 ? p : -p);
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return std::clamp(acc.value(), 0.0, 1.0);
}

std::uint64_t sufficient_sample_count(std::uint32_t base, std::uint32_t dim,
                                      std::uint32_t order, double eps) {
    if (eps < 0.0) throw std::invalid_argument("eps must be >= 0");
    const Params params(base, order, dim);
    const double value = (1.0 + eps) * static_cast<double>(params.total_cells) *
                         static_cast<double>(order) * std::log(static_cast<double>(base));
    if (!(value < 9.2e18))
        throw std::overflow_error("sufficient sample count exceeds 64 bits");
    return static_cast<std::uint64_t>(std::ceil(value));
}

NecessaryBound necessary_sample_count(std::uint32_t base, std::uint32_t dim,
                                      std::uint32_t order) {
    const Params params(base, order, dim);
    const double log_base = std::log(static_cast<double>(base));
    const double log_factorial = std::lgamma(static_cast<double>(base) + 1.0);
    const double log_value =
        static_cast<double>(order) * dim * log_base -
        static_cast<double>(order) * (dim - 1) / base * log_factorial;

    NecessaryBound out;
    out.value = std::exp(log_value);
    if (base == 2) {
        out.has_closed_form = true;
        out.closed_form =
            std::exp2(static_cast<double>(order) + static_cast<double>(order) * (dim - 1) / 2.0);
        if (std::fabs(out.value - out.closed_form) >
            1e-9 * std::max(1.0, out.closed_form))
            throw std::logic_error("base-2 closed form disagrees with the log-domain value");
    } else {
        const double log_chain =
            static_cast<double>(order) * log_base +
            static_cast<double>(order) * (dim - 1) / base *
                (static_cast<double>(base) - 2.0 - 2.0 * (log_base - std::log(2.0)));
        if (log_value < log_chain - 1e-9)
            throw std::logic_error("necessary bound fell below its factorial-ratio minorant");
    }
    return out;
}

FactorialRatioBound factorial_ratio_bound(std::uint32_t base) {
    if (base < 3) throw std::invalid_argument("base must be >= 3");
    const double b = static_cast<double>(base);
    FactorialRatioBound out;
    out.lhs = std::exp(std::log(b) - std::lgamma(b + 1.0) / b);
    out.rhs = std::exp((b - 2.0 - 2.0 * (std::log(b) - std::log(2.0))) / b);
    return out;
}

}  // namespace omdnet
