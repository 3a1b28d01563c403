#include "omdnet/constructions.hpp"

#include "omdnet/errors.hpp"
#include "omdnet/rng.hpp"

#include <stdexcept>
#include <string>

namespace omdnet {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

namespace {

using Matrix = std::vector<std::vector<std::uint32_t>>;  // m x m, entries mod b

// upper-triangular binomial matrix: entry (r, s) = C(s, r) mod b
Matrix pascal_matrix(std::uint32_t m, std::uint32_t b) {
    Matrix p(m, std::vector<std::uint32_t>(m, 0));
    for (std::uint32_t s = 0; s < m; ++s) {
        p[0][s] = 1;
        for (std::uint32_t r = 1; r <= s; ++r)
            p[r][s] = (p[r - 1][s - 1] + p[r][s - 1]) % b;
    }
    return p;
}

Matrix multiply_mod(const Matrix& a, const Matrix& b, std::uint32_t mod) {
    const std::size_t m = a.size();
    Matrix c(m, std::vector<std::uint32_t>(m, 0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k < m; ++k) {
            if (a[r][k] == 0) continue;
            const std::uint64_t f = a[r][k];
            for (std::size_t s = 0; s < m; ++s)
                c[r][s] = static_cast<std::uint32_t>((c[r][s] + f * b[k][s]) % mod);
        }
    return c;
}

}  // namespace

PointSet generate_net(std::uint32_t base, std::uint32_t order, std::uint32_t dim) {
    if (!is_prime(base))
        throw std::invalid_argument("unsupported base: " + std::to_string(base) +
                                    " is not prime");
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (dim > base + 1) {
        if (order >= 2)
            throw existence_error("a (0," + std::to_string(order) + "," + std::to_string(dim) +
                                  ")-net in base " + std::to_string(base) +
                                  " cannot exist if m>=2 and d>=b+2");
        throw std::invalid_argument("dimension must be at most base+1 for this construction");
    }

    const Params params(base, order, dim);
    const std::uint64_t n = params.cells_per_axis;
    const std::uint32_t m = order;
    const std::uint32_t scrambled = dim - 1;

    std::vector<Matrix> gen;
    if (scrambled > 0 && m > 0) {
        const Matrix pascal = pascal_matrix(m, base);
        Matrix identity(m, std::vector<std::uint32_t>(m, 0));
        for (std::uint32_t r = 0; r < m; ++r) identity[r][r] = 1;
        gen.push_back(identity);
        for (std::uint32_t j = 1; j < scrambled; ++j)
            gen.push_back(multiply_mod(gen.back(), pascal, base));
    }

    PointSet out;
    out.dim = dim;
    out.points.reserve(n);

    std::vector<std::uint32_t> digits(m, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t rest = i;
        for (std::uint32_t l = 0; l < m; ++l) {
            digits[l] = static_cast<std::uint32_t>(rest % base);
            rest /= base;
        }

        Point pt;
        pt.coords.assign(dim, 0.0);
        pt.exact.assign(dim, ExactCoord{0, m});
        for (std::uint32_t j = 0; j < scrambled; ++j) {
            std::uint64_t numerator = 0;
            for (std::uint32_t r = 0; r < m; ++r) {
                std::uint64_t digit = 0;
                for (std::uint32_t s = 0; s < m; ++s)
                    digit += static_cast<std::uint64_t>(gen[j][r][s]) * digits[s];
                numerator = numerator * base + digit % base;
            }
            pt.exact[j] = {numerator, m};
            pt.coords[j] = static_cast<double>(numerator) / static_cast<double>(n);
        }
        pt.exact[dim - 1] = {i, m};
        pt.coords[dim - 1] = static_cast<double>(i) / static_cast<double>(n);
        out.points.push_back(std::move(pt));
    }
    return out;
}

PointSet sample_uniform(const Params& params, std::uint64_t seed, std::uint64_t count) {
    checked_mul(count, params.dim);  // counter-range guard
    PointSet out;
    out.dim = params.dim;
    out.points.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Point& pt = out.points[i];
        pt.coords.resize(params.dim);
        for (std::uint32_t j = 0; j < params.dim; ++j)
            pt.coords[j] = rng::uniform01(seed, i * params.dim + j);
    }
    return out;
}

}  // namespace omdnet
