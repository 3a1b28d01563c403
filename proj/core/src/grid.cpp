#include "omdnet/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace omdnet {

std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<Composition> compositions(std::uint32_t m, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    binomial_checked(static_cast<std::uint64_t>(m) + d - 1, d - 1);  // count guard

    std::vector<Composition> out;
    Composition cur(d, 0);
    auto rec = [&](auto&& self, std::uint32_t axis, std::uint32_t remaining) -> void {
        if (axis + 1 == d) {
            cur[axis] = remaining;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = 0; v <= remaining; ++v) {
            cur[axis] = v;
            self(self, axis + 1, remaining - v);
        }
    };
    rec(rec, 0, m);
    return out;
}

void validate_point_set(const PointSet& points, std::uint32_t base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    for (const Point& p : points.points) {
        if (p.coords.size() != points.dim)
            throw std::invalid_argument("point dimension mismatch");
        if (!p.exact.empty() && p.exact.size() != p.coords.size())
            throw std::invalid_argument("exact form must cover every coordinate");
        for (std::size_t j = 0; j < p.coords.size(); ++j) {
            const double x = p.coords[j];
            if (!(x >= 0.0 && x < 1.0))
                throw std::invalid_argument("coordinate outside [0,1)");
            if (p.exact.empty()) continue;
            const ExactCoord& e = p.exact[j];
            const std::uint64_t denom = checked_pow(base, e.exponent);
            if (e.numerator >= denom)
                throw std::invalid_argument("exact coordinate outside [0,1)");
            const double v =
                static_cast<double>(e.numerator) / static_cast<double>(denom);
            const double ulp = std::nextafter(std::max(x, v), 2.0) - std::max(x, v);
            if (std::fabs(x - v) > ulp)
                throw std::invalid_argument(
                    "exact coordinate disagrees with the float coordinate");
        }
    }
}

CellIndex cell_of_point(const Point& p, const Params& params) {
    if (p.coords.size() != params.dim)
        throw std::invalid_argument("point dimension mismatch");
    if (!p.exact.empty() && p.exact.size() != p.coords.size())
        throw std::invalid_argument("exact form must cover every coordinate");

    CellIndex cell;
    cell.resolution = params.order;
    cell.a.resize(params.dim);
    const std::uint64_t scale = params.cells_per_axis;

    for (std::uint32_t j = 0; j < params.dim; ++j) {
        if (!p.exact.empty()) {
            const ExactCoord& e = p.exact[j];
            const std::uint64_t denom = checked_pow(params.base, e.exponent);
            if (e.numerator >= denom)
                throw std::invalid_argument("exact coordinate outside [0,1)");
            if (e.exponent <= params.order)
                cell.a[j] = checked_mul(e.numerator,
                                        checked_pow(params.base, params.order - e.exponent));
            else
                cell.a[j] = e.numerator / checked_pow(params.base, e.exponent - params.order);
        } else {
            const double x = p.coords[j];
            if (!(x >= 0.0 && x < 1.0))
                throw std::invalid_argument("coordinate outside [0,1)");
            auto idx = static_cast<std::uint64_t>(x * static_cast<double>(scale));
            if (idx >= scale) idx = scale - 1;  // rounding guard at cell boundaries
            cell.a[j] = idx;
        }
    }
    return cell;
}

ElementaryInterval interval_of_cell(const CellIndex& cell, const Composition& shape,
                                    const Params& params) {
    if (cell.a.size() != params.dim || shape.size() != params.dim)
        throw std::invalid_argument("dimension mismatch");
    if (cell.resolution != params.order)
        throw std::invalid_argument("cell resolution does not match the parameters");
    std::uint64_t sum = 0;
    for (auto c : shape) sum += c;
    if (sum != params.order)
        throw std::invalid_argument("composition entries must sum to the order");

    ElementaryInterval iv;
    iv.shape = shape;
    iv.offset.resize(params.dim);
    for (std::uint32_t j = 0; j < params.dim; ++j) {
        if (cell.a[j] >= params.cells_per_axis)
            throw std::invalid_argument("cell index out of range");
        iv.offset[j] = cell.a[j] / checked_pow(params.base, params.order - shape[j]);
    }
    return iv;
}

std::uint64_t linear_cell_index(const CellIndex& cell, const Params& params) {
    if (cell.a.size() != params.dim)
        throw std::invalid_argument("dimension mismatch");
    std::uint64_t idx = 0;
    for (std::uint32_t j = 0; j < params.dim; ++j) {
        if (cell.a[j] >= params.cells_per_axis)
            throw std::invalid_argument("cell index out of range");
        idx = idx * params.cells_per_axis + cell.a[j];
    }
    return idx;
}

CellIndex cell_from_linear(std::uint64_t index, const Params& params) {
    if (params.total_cells != 0 && index >= params.total_cells)
        throw std::invalid_argument("linear cell index out of range");
    CellIndex cell;
    cell.resolution = params.order;
    cell.a.assign(params.dim, 0);
    for (std::uint32_t j = params.dim; j-- > 0;) {
        cell.a[j] = index % params.cells_per_axis;
        index /= params.cells_per_axis;
    }
    return cell;
}

}  // namespace omdnet
