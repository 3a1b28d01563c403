#include "omdnet/patterns.hpp"

#include "omdnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace omdnet {

namespace {

// per-axis divisors b^(m-c_j) of one composition
std::vector<std::uint64_t> shape_divisors(const Composition& shape, const Params& pr) {
    std::vector<std::uint64_t> div(pr.dim);
    for (std::uint32_t j = 0; j < pr.dim; ++j)
        div[j] = checked_pow(pr.base, pr.order - shape[j]);
    return div;
}

// flatten the interval offset of a cell under one composition; always < b^m
std::uint64_t reduced_index(const Cell& cell, const Composition& shape,
                            const std::vector<std::uint64_t>& div, std::uint32_t base) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < cell.size(); ++j)
        idx = idx * checked_pow(base, shape[j]) + cell[j] / div[j];
    return idx;
}

}  // namespace

Pattern make_pattern(const Params& params, std::vector<Cell> cells) {
    if (cells.size() != params.cells_per_axis)
        throw std::invalid_argument("pattern must contain exactly b^m cells");
    for (const Cell& c : cells) {
        if (c.size() != params.dim)
            throw std::invalid_argument("pattern cell dimension mismatch");
        for (std::uint64_t v : c)
            if (v >= params.cells_per_axis)
                throw std::invalid_argument("pattern cell index out of range");
    }
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw std::invalid_argument("pattern cells must be distinct");
    return Pattern{params, std::move(cells)};
}

AdmissibilityResult is_admissible(const Pattern& pattern) {
    const Params& pr = pattern.params;
    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> seen;
    for (const Composition& shape : compositions(pr.order, pr.dim)) {
        const auto div = shape_divisors(shape, pr);
        seen.assign(pr.cells_per_axis, kFree);
        for (std::size_t ci = 0; ci < pattern.cells.size(); ++ci) {
            const std::uint64_t idx = reduced_index(pattern.cells[ci], shape, div, pr.base);
            if (seen[idx] != kFree) {
                AdmissibilityResult res;
                res.admissible = false;
                res.violating_shape = shape;
                res.colliding_cells = {seen[idx], ci};
                return res;
            }
            seen[idx] = ci;
        }
    }
    return {};
}

bool within_enumeration_guard(const Params& params) {
    return params.total_cells <= 4096 && params.cells_per_axis <= 16;
}

std::vector<Pattern> enumerate_patterns(const Params& params) {
    if (!within_enumeration_guard(params))
        throw size_guard_error(
            "pattern enumeration is limited to b^(m*d) <= 4096 and b^m <= 16");

    const auto comps = compositions(params.order, params.dim);
    const auto total = static_cast<std::uint32_t>(params.total_cells);
    const auto want = static_cast<std::uint32_t>(params.cells_per_axis);
    const std::size_t n_comps = comps.size();

    // reduced interval index of every cell under every composition
    std::vector<std::uint16_t> reduced(static_cast<std::size_t>(total) * n_comps);
    for (std::uint32_t t = 0; t < total; ++t) {
        const CellIndex cell = cell_from_linear(t, params);
        for (std::size_t k = 0; k < n_comps; ++k) {
            const auto div = shape_divisors(comps[k], params);
            reduced[static_cast<std::size_t>(t) * n_comps + k] =
                static_cast<std::uint16_t>(reduced_index(cell.a, comps[k], div, params.base));
        }
    }

    std::vector<Pattern> result;
    std::vector<std::uint32_t> chosen;
    std::vector<std::vector<char>> used(n_comps, std::vector<char>(want, 0));

    auto rec = [&](auto&& self, std::uint32_t start) -> void {
        if (chosen.size() == want) {
            std::vector<Cell> cells;
            cells.reserve(want);
            for (std::uint32_t t : chosen) cells.push_back(cell_from_linear(t, params).a);
            result.push_back(Pattern{params, std::move(cells)});
            return;
        }
        const std::uint32_t missing = want - static_cast<std::uint32_t>(chosen.size());
        for (std::uint32_t t = start; t + missing <= total; ++t) {
            const std::uint16_t* row = &reduced[static_cast<std::size_t>(t) * n_comps];
            bool ok = true;
            for (std::size_t k = 0; k < n_comps; ++k)
                if (used[k][row[k]]) { ok = false; break; }
            if (!ok) continue;
            for (std::size_t k = 0; k < n_comps; ++k) used[k][row[k]] = 1;
            chosen.push_back(t);
            self(self, t + 1);
            chosen.pop_back();
            for (std::size_t k = 0; k < n_comps; ++k) used[k][row[k]] = 0;
        }
    };
    rec(rec, 0);
    return result;
}

PatternCount pattern_count_exact_2d(std::uint32_t base, std::uint32_t order) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    PatternCount out;
    if (order == 0) {
        out.exact = boost::multiprecision::cpp_int(1);
        out.log_value = 0.0;
        return out;
    }
    const double log_factorial = std::lgamma(static_cast<double>(base) + 1.0);
    const double exponent = static_cast<double>(order) *
                            std::pow(static_cast<double>(base), static_cast<double>(order) - 1.0);
    out.log_value = exponent * log_factorial;

    const double digits10 = out.log_value / std::log(10.0);
    if (digits10 <= 1e6) {
        const std::uint64_t e = checked_mul(order, checked_pow(base, order - 1));
        boost::multiprecision::cpp_int factorial = 1;
        for (std::uint32_t i = 2; i <= base; ++i) factorial *= i;
        out.exact = boost::multiprecision::pow(factorial, static_cast<unsigned>(e));
    }
    return out;
}

double pattern_count_upper_log(const Params& params) {
    if (params.dim == 1 || params.order == 0) return 0.0;
    return static_cast<double>(params.order) *
           std::pow(static_cast<double>(params.base), static_cast<double>(params.order) - 1.0) *
           static_cast<double>(params.dim - 1) *
           std::lgamma(static_cast<double>(params.base) + 1.0);
}

Pattern compose_strips(const StripDecomposition& dec) {
    const std::uint32_t b = dec.base;
    const std::uint32_t m = dec.order;
    if (b < 2) throw std::invalid_argument("base must be >= 2");
    if (m < 1) throw std::invalid_argument("composed order must be >= 1");
    if (dec.subpatterns.size() != b)
        throw std::invalid_argument("expected one subpattern per vertical strip");

    const Params sub_params(b, m - 1, 2);
    const std::uint64_t rows = sub_params.cells_per_axis;  // b^(m-1)
    for (const Pattern& sub : dec.subpatterns) {
        if (!sub.params.same_grid(sub_params) || sub.cells.size() != rows)
            throw std::invalid_argument("subpattern order mismatch");
    }
    if (dec.perms.size() != rows)
        throw std::invalid_argument("expected one permutation per row");
    for (const auto& perm : dec.perms) {
        if (perm.size() != b)
            throw std::invalid_argument("permutation size mismatch");
        std::vector<char> hit(b, 0);
        for (std::uint32_t v : perm) {
            if (v >= b || hit[v]) throw std::invalid_argument("row permutation is not a bijection");
            hit[v] = 1;
        }
    }

    const Params out_params(b, m, 2);
    std::vector<Cell> cells;
    cells.reserve(out_params.cells_per_axis);
    for (std::uint32_t k = 0; k < b; ++k) {
        for (const Cell& sc : dec.subpatterns[k].cells) {
            const std::uint64_t x = sc[0];
            const std::uint64_t y = sc[1];
            cells.push_back({k * rows + x, y * b + dec.perms[y][k]});
        }
    }
    return make_pattern(out_params, std::move(cells));
}

StripDecomposition decompose_strips(const Pattern& pattern) {
    const Params& pr = pattern.params;
    if (pr.dim != 2) throw std::invalid_argument("strip decomposition requires d = 2");
    if (pr.order < 1) throw std::invalid_argument("strip decomposition requires m >= 1");
    if (!is_admissible(pattern).admissible)
        throw std::invalid_argument("pattern is not admissible");

    const std::uint32_t b = pr.base;
    const std::uint64_t rows = pr.cells_per_axis / b;  // b^(m-1)

    StripDecomposition dec;
    dec.base = b;
    dec.order = pr.order;
    dec.perms.assign(rows, std::vector<std::uint32_t>(b, 0));
    std::vector<std::vector<Cell>> strip_cells(b);

    for (const Cell& cell : pattern.cells) {
        const std::uint64_t x = cell[0];
        const std::uint64_t y = cell[1];
        const std::uint64_t k = x / rows;
        const std::uint64_t r = y / b;
        strip_cells[k].push_back({x % rows, r});
        dec.perms[r][k] = static_cast<std::uint32_t>(y % b);
    }

    const Params sub_params(b, pr.order - 1, 2);
    dec.subpatterns.reserve(b);
    for (std::uint32_t k = 0; k < b; ++k)
        dec.subpatterns.push_back(make_pattern(sub_params, std::move(strip_cells[k])));
    return dec;
}

Pattern project_pattern(const Pattern& pattern, std::uint32_t axis0, std::uint32_t axis1) {
    const Params& pr = pattern.params;
    if (pr.dim < 2) throw std::invalid_argument("projection requires d >= 2");
    if (axis0 == axis1 || axis0 >= pr.dim || axis1 >= pr.dim)
        throw std::invalid_argument("projection axes must be distinct and in range");
    std::vector<Cell> cells;
    cells.reserve(pattern.cells.size());
    for (const Cell& c : pattern.cells) cells.push_back({c[axis0], c[axis1]});
    return make_pattern(Params(pr.base, pr.order, 2), std::move(cells));
}

OverlapCensus overlap_census(const std::vector<Pattern>& family) {
    if (family.empty()) throw std::invalid_argument("empty pattern family");
    const Params pr = family.front().params;
    if (!within_enumeration_guard(pr))
        throw size_guard_error("census is limited to the enumeration guard");
    for (const Pattern& p : family)
        if (!p.params.same_grid(pr) || p.cells.size() != pr.cells_per_axis)
            throw std::invalid_argument("census requires a family with uniform parameters");

    const std::size_t n = family.size();
    std::vector<std::vector<std::uint32_t>> linear(n);
    for (std::size_t i = 0; i < n; ++i) {
        linear[i].reserve(pr.cells_per_axis);
        for (const Cell& c : family[i].cells)
            linear[i].push_back(static_cast<std::uint32_t>(
                linear_cell_index(CellIndex{c, pr.order}, pr)));
        // cells are sorted lexicographically, so linear indices are ascending
    }

    OverlapCensus census;
    census.pattern_count = n;
    census.pair_overlap_counts.assign(pr.cells_per_axis + 1, 0);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t a = 0, b = 0, shared = 0;
            const auto& u = linear[i];
            const auto& v = linear[j];
            while (a < u.size() && b < v.size()) {
                if (u[a] == v[b]) { ++shared, ++a, ++b; }
                else if (u[a] < v[b]) ++a;
                else ++b;
            }
            ++census.pair_overlap_counts[shared];
        }
    }

    std::vector<std::uint64_t> multiplicity(pr.total_cells, 0);
    for (const auto& lin : linear)
        for (std::uint32_t t : lin) ++multiplicity[t];
    census.multiplicity_min = multiplicity.empty() ? 0 : multiplicity[0];
    census.multiplicity_max = census.multiplicity_min;
    for (std::uint64_t mu : multiplicity) {
        census.multiplicity_min = std::min(census.multiplicity_min, mu);
        census.multiplicity_max = std::max(census.multiplicity_max, mu);
    }
    census.multiplicity_constant = census.multiplicity_min == census.multiplicity_max;

    census.total_overlap = 0;
    for (std::size_t ell = 1; ell < census.pair_overlap_counts.size(); ++ell)
        census.total_overlap += ell * census.pair_overlap_counts[ell];

    const double a_count = static_cast<double>(n);
    const double cells = static_cast<double>(pr.cells_per_axis);
    const double shrink = std::pow(static_cast<double>(pr.base),
                                   -static_cast<double>(pr.order) *
                                       (static_cast<double>(pr.dim) - 2.0));
    census.n0_lower_bound = 0.5 * a_count * a_count * (1.0 - shrink) + 0.5 * a_count * (cells - 1.0);
    return census;
}

}  // namespace omdnet
