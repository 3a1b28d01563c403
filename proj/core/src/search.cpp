#include "omdnet/search.hpp"

#include "omdnet/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace omdnet {

std::map<std::uint64_t, std::vector<std::size_t>> occupied_cells(const PointSet& points,
                                                                 const Params& params) {
    if (points.dim != params.dim)
        throw std::invalid_argument("point set dimension mismatch");
    std::map<std::uint64_t, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < points.points.size(); ++i) {
        const CellIndex cell = cell_of_point(points.points[i], params);
        cells[linear_cell_index(cell, params)].push_back(i);
    }
    return cells;
}

namespace {

SearchResult build_result(const std::vector<std::uint64_t>& chosen, const Params& params,
                          const std::map<std::uint64_t, std::vector<std::size_t>>& occupied) {
    SearchResult res;
    std::vector<Cell> cells;
    cells.reserve(chosen.size());
    res.point_indices.reserve(chosen.size());
    for (std::uint64_t t : chosen) {
        cells.push_back(cell_from_linear(t, params).a);
        res.point_indices.push_back(occupied.at(t).front());
    }
    res.pattern = Pattern{params, std::move(cells)};  // ascending linear = sorted cells
    return res;
}

std::optional<SearchResult> search_family(
    const std::vector<Pattern>& family, const Params& params,
    const std::map<std::uint64_t, std::vector<std::size_t>>& occupied) {
    for (const Pattern& pattern : family) {
        bool all_occupied = true;
        std::vector<std::uint64_t> linear;
        linear.reserve(pattern.cells.size());
        for (const Cell& c : pattern.cells) {
            const std::uint64_t t = linear_cell_index(CellIndex{c, params.order}, params);
            if (!occupied.contains(t)) {
                all_occupied = false;
                break;
            }
            linear.push_back(t);
        }
        if (all_occupied) return build_result(linear, params, occupied);
    }
    return std::nullopt;
}

std::optional<SearchResult> search_backtrack(
    const Params& params, const std::map<std::uint64_t, std::vector<std::size_t>>& occupied) {
    const auto comps = compositions(params.order, params.dim);
    const std::size_t n_comps = comps.size();
    const std::uint64_t want = params.cells_per_axis;

    if (checked_mul(n_comps, want) > (std::uint64_t(1) << 28))
        throw size_guard_error("backtracking state exceeds the instance-size guard");

    std::vector<std::uint64_t> cells;
    cells.reserve(occupied.size());
    for (const auto& [t, pts] : occupied) cells.push_back(t);

    // reduced interval index of every occupied cell under every composition
    std::vector<std::vector<std::uint64_t>> divisors(n_comps), radixes(n_comps);
    for (std::size_t k = 0; k < n_comps; ++k) {
        divisors[k].resize(params.dim);
        radixes[k].resize(params.dim);
        for (std::uint32_t j = 0; j < params.dim; ++j) {
            divisors[k][j] = checked_pow(params.base, params.order - comps[k][j]);
            radixes[k][j] = checked_pow(params.base, comps[k][j]);
        }
    }
    std::vector<std::uint64_t> reduced(cells.size() * n_comps);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const CellIndex cell = cell_from_linear(cells[i], params);
        for (std::size_t k = 0; k < n_comps; ++k) {
            std::uint64_t idx = 0;
            for (std::uint32_t j = 0; j < params.dim; ++j)
                idx = idx * radixes[k][j] + cell.a[j] / divisors[k][j];
            reduced[i * n_comps + k] = idx;
        }
    }

    std::vector<std::vector<char>> used(n_comps, std::vector<char>(want, 0));
    std::vector<std::uint64_t> chosen;
    chosen.reserve(want);

    auto rec = [&](auto&& self, std::size_t start) -> bool {
        if (chosen.size() == want) return true;
        const std::size_t missing = want - chosen.size();
        for (std::size_t i = start; i + missing <= cells.size(); ++i) {
            const std::uint64_t* row = &reduced[i * n_comps];
            bool ok = true;
            for (std::size_t k = 0; k < n_comps; ++k)
                if (used[k][row[k]]) { ok = false; break; }
            if (!ok) continue;
            for (std::size_t k = 0; k < n_comps; ++k) used[k][row[k]] = 1;
            chosen.push_back(cells[i]);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
            for (std::size_t k = 0; k < n_comps; ++k) used[k][row[k]] = 0;
        }
        return false;
    };
    if (rec(rec, 0)) return build_result(chosen, params, occupied);
    return std::nullopt;
}

}  // namespace

std::optional<SearchResult> find_net_subset(const PointSet& points, const Params& params,
                                            SearchStrategy strategy) {
    const auto occupied = occupied_cells(points, params);
    if (occupied.size() < params.cells_per_axis) return std::nullopt;

    if (strategy == SearchStrategy::automatic)
        strategy = within_enumeration_guard(params) ? SearchStrategy::enumerate
                                                    : SearchStrategy::backtrack;
    if (strategy == SearchStrategy::enumerate)
        return search_family(enumerate_patterns(params), params, occupied);
    return search_backtrack(params, occupied);
}

std::optional<SearchResult> find_net_subset_in_family(const std::vector<Pattern>& family,
                                                      const PointSet& points,
                                                      const Params& params) {
    const auto occupied = occupied_cells(points, params);
    if (occupied.size() < params.cells_per_axis) return std::nullopt;
    return search_family(family, params, occupied);
}

}  // namespace omdnet
