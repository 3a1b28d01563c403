#include "doctest.h"

#include "omdnet/constructions.hpp"
#include "omdnet/errors.hpp"
#include "omdnet/netcheck.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

using namespace omdnet;

TEST_SUITE("constructions") {

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(5));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("the (2,2,2) net matches the radical-inverse construction") {
    const auto net = generate_net(2, 2, 2);
    REQUIRE(net.points.size() == 4);
    std::set<std::pair<double, double>> got;
    for (const Point& p : net.points) got.insert({p.coords[0], p.coords[1]});
    const std::set<std::pair<double, double>> want = {
        {0.0, 0.0}, {0.5, 0.25}, {0.25, 0.5}, {0.75, 0.75}};
    CHECK(got == want);
    CHECK(is_net(net, Params(2, 2, 2)).ok);
}

TEST_CASE("order zero yields a single trivial net point") {
    const auto net = generate_net(2, 0, 3);
    REQUIRE(net.points.size() == 1);
    CHECK(net.points[0].coords == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(is_net(net, Params(2, 0, 3)).ok);
}

TEST_CASE("every supported parameter combination verifies") {
    for (std::uint32_t b : {2u, 3u, 5u}) {
        for (std::uint32_t m = 0; m <= 4; ++m) {
            const std::uint32_t dmax = std::min(b + 1, 4u);
            for (std::uint32_t d = 1; d <= dmax; ++d) {
                const Params pr(b, m, d);
                const auto net = generate_net(b, m, d);
                REQUIRE(net.points.size() == pr.cells_per_axis);
                CHECK(is_net(net, pr).ok);

                // coordinates are exact multiples of b^-m
                for (const Point& p : net.points) {
                    REQUIRE(p.exact.size() == d);
                    for (std::uint32_t j = 0; j < d; ++j) {
                        CHECK(p.exact[j].exponent == m);
                        CHECK(p.coords[j] ==
                              static_cast<double>(p.exact[j].numerator) /
                                  static_cast<double>(pr.cells_per_axis));
                    }
                }

                // pairwise distinct tuples
                if (d >= 2 && m >= 1) {
                    std::set<std::vector<double>> distinct;
                    for (const Point& p : net.points) distinct.insert(p.coords);
                    CHECK(distinct.size() == net.points.size());
                }
            }
        }
    }
}

TEST_CASE("non-prime bases are rejected") {
    CHECK_THROWS_AS(generate_net(4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_net(6, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_net(1, 1, 1), std::invalid_argument);
}

TEST_CASE("impossible dimensions raise the existence error") {
    CHECK_THROWS_AS(generate_net(2, 2, 4), existence_error);
    CHECK_THROWS_AS(generate_net(3, 3, 5), existence_error);
    CHECK_THROWS_WITH_AS(generate_net(2, 2, 4),
                         doctest::Contains("cannot exist"), existence_error);
    // d beyond b+1 with small m is outside this construction but not impossible
    CHECK_THROWS_AS(generate_net(2, 1, 4), std::invalid_argument);
}

TEST_CASE("sampling is deterministic in the seed") {
    const Params pr(2, 1, 3);
    const auto a = sample_uniform(pr, 99, 50);
    const auto b = sample_uniform(pr, 99, 50);
    REQUIRE(a.points.size() == 50);
    for (std::size_t i = 0; i < a.points.size(); ++i)
        CHECK(a.points[i].coords == b.points[i].coords);

    const auto c = sample_uniform(pr, 100, 50);
    bool all_equal = true;
    for (std::size_t i = 0; i < a.points.size(); ++i)
        if (a.points[i].coords != c.points[i].coords) all_equal = false;
    CHECK_FALSE(all_equal);

    CHECK(sample_uniform(pr, 1, 0).points.empty());
}

TEST_CASE("longer samples extend shorter ones") {
    const Params pr(2, 2, 2);
    const auto small = sample_uniform(pr, 7, 8);
    const auto large = sample_uniform(pr, 7, 32);
    for (std::size_t i = 0; i < small.points.size(); ++i)
        CHECK(small.points[i].coords == large.points[i].coords);
}

TEST_CASE("empirical cell frequencies are uniform") {
    const Params pr(2, 2, 2);
    const std::uint64_t n = 100000;
    const auto ps = sample_uniform(pr, 4242, n);
    std::vector<std::uint64_t> counts(pr.total_cells, 0);
    for (const Point& p : ps.points)
        ++counts[linear_cell_index(cell_of_point(p, pr), pr)];

    // binomial(n, 1/16): mean 6250, sigma ~76.5
    const double mean = static_cast<double>(n) / 16.0;
    const double sigma = std::sqrt(static_cast<double>(n) * (1.0 / 16.0) * (15.0 / 16.0));
    for (std::uint64_t c : counts)
        CHECK(std::fabs(static_cast<double>(c) - mean) <= 4.0 * sigma);
}

}  // TEST_SUITE
