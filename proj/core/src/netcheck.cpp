#include "omdnet/netcheck.hpp"

#include "omdnet/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace omdnet {

NetCheckResult is_net(const PointSet& points, const Params& params) {
    if (points.dim != params.dim)
        throw std::invalid_argument("point set dimension mismatch");

    NetCheckResult result;
    if (points.points.size() != params.cells_per_axis) {
        NetViolation v;
        v.size_mismatch = true;
        v.count = points.points.size();
        result.violation = v;
        return result;
    }

    std::vector<std::vector<std::uint64_t>> cells;
    cells.reserve(points.points.size());
    for (const Point& p : points.points) cells.push_back(cell_of_point(p, params).a);

    std::vector<std::uint64_t> counts;
    for (const Composition& shape : compositions(params.order, params.dim)) {
        std::vector<std::uint64_t> div(params.dim), radix(params.dim);
        for (std::uint32_t j = 0; j < params.dim; ++j) {
            div[j] = checked_pow(params.base, params.order - shape[j]);
            radix[j] = checked_pow(params.base, shape[j]);
        }

        counts.assign(params.cells_per_axis, 0);
        for (const auto& a : cells) {
            std::uint64_t idx = 0;
            for (std::uint32_t j = 0; j < params.dim; ++j)
                idx = idx * radix[j] + a[j] / div[j];
            ++counts[idx];
        }

        for (std::uint64_t idx = 0; idx < counts.size(); ++idx) {
            if (counts[idx] == 1) continue;
            NetViolation v;
            v.count = counts[idx];
            v.shape = shape;
            v.offset.assign(params.dim, 0);
            std::uint64_t rest = idx;
            for (std::uint32_t j = params.dim; j-- > 0;) {
                v.offset[j] = rest % radix[j];
                rest /= radix[j];
            }
            result.violation = v;
            return result;
        }
    }
    result.ok = true;
    return result;
}

double star_discrepancy(const PointSet& points) {
    const std::size_t n = points.points.size();
    const std::uint32_t d = points.dim;
    if (n == 0) throw std::invalid_argument("point set is empty");
    if (n > 256 || d > 3)
        throw size_guard_error("exact star discrepancy is limited to 256 points and d <= 3");

    // per-axis sorted distinct coordinate values plus the sentinel 1.0
    std::vector<std::vector<double>> grid(d);
    for (std::uint32_t j = 0; j < d; ++j) {
        grid[j].reserve(n + 1);
        for (const Point& p : points.points) {
            if (p.coords.size() != d) throw std::invalid_argument("point dimension mismatch");
            const double x = p.coords[j];
            if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("coordinate outside [0,1)");
            grid[j].push_back(x);
        }
        std::sort(grid[j].begin(), grid[j].end());
        grid[j].erase(std::unique(grid[j].begin(), grid[j].end()), grid[j].end());
        grid[j].push_back(1.0);
    }

    std::vector<std::size_t> extent(d), stride(d);
    std::size_t total = 1;
    for (std::uint32_t j = 0; j < d; ++j) extent[j] = grid[j].size();
    for (std::uint32_t j = d; j-- > 0;) {
        stride[j] = total;
        total *= extent[j];
    }

    // closed box counts: histogram over coordinate ranks, then prefix sums
    std::vector<std::uint32_t> prefix(total, 0);
    for (const Point& p : points.points) {
        std::size_t off = 0;
        for (std::uint32_t j = 0; j < d; ++j) {
            const auto it = std::lower_bound(grid[j].begin(), grid[j].end(), p.coords[j]);
            off += static_cast<std::size_t>(it - grid[j].begin()) * stride[j];
        }
        ++prefix[off];
    }
    for (std::uint32_t j = 0; j < d; ++j) {
        for (std::size_t off = 0; off < total; ++off) {
            const std::size_t pos = off / stride[j] % extent[j];
            if (pos > 0) prefix[off] += prefix[off - stride[j]];
        }
    }

    const double inv_n = 1.0 / static_cast<double>(n);
    double best = 0.0;
    std::vector<std::size_t> idx(d, 0);
    bool done = false;
    while (!done) {
        std::size_t off = 0;
        double vol = 1.0;
        bool interior = true;  // every index >= 1, so the open count is defined
        for (std::uint32_t j = 0; j < d; ++j) {
            off += idx[j] * stride[j];
            vol *= grid[j][idx[j]];
            interior = interior && idx[j] > 0;
        }
        const double closed = static_cast<double>(prefix[off]) * inv_n;
        double open = 0.0;
        if (interior) {
            std::size_t open_off = off;
            for (std::uint32_t j = 0; j < d; ++j) open_off -= stride[j];
            open = static_cast<double>(prefix[open_off]) * inv_n;
        }
        best = std::max(best, std::max(vol - open, closed - vol));

        done = true;
        for (std::uint32_t j = d; j-- > 0;) {
            if (++idx[j] < extent[j]) {
                done = false;
                break;
            }
            idx[j] = 0;
        }
    }
    return best;
}

}  // namespace omdnet
