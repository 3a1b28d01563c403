#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace omdnet {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw std::overflow_error("64-bit overflow in multiplication");
    return a * b;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) result = checked_mul(result, base);
    return result;
}

// Grid parameters: base b >= 2, resolution order m >= 0, dimension d >= 1,
// plus an optional sample count N. Construction fails unless both b^m and
// b^(m*d) fit in 64-bit unsigned arithmetic.
struct Params {
    std::uint32_t base = 2;
    std::uint32_t order = 0;
    std::uint32_t dim = 1;
    std::uint64_t n_points = 0;

    std::uint64_t cells_per_axis = 1;  // b^m
    std::uint64_t total_cells = 1;     // b^(m*d)

    Params(std::uint32_t b, std::uint32_t m, std::uint32_t d, std::uint64_t n = 0)
        : base(b), order(m), dim(d), n_points(n) {
        if (b < 2) throw std::invalid_argument("base must be >= 2");
        if (d < 1) throw std::invalid_argument("dimension must be >= 1");
        cells_per_axis = checked_pow(b, m);
        total_cells = checked_pow(b, static_cast<std::uint64_t>(m) * d);
    }

    Params with_points(std::uint64_t n) const {
        Params p = *this;
        p.n_points = n;
        return p;
    }

    bool same_grid(const Params& o) const {
        return base == o.base && order == o.order && dim == o.dim;
    }

    friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace omdnet
