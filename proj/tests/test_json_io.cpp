#include "doctest.h"

#include "omdnet/constructions.hpp"
#include "omdnet/json_io.hpp"

#include <string>

using namespace omdnet;

TEST_SUITE("json_io") {

TEST_CASE("point sets round-trip with exact coordinates") {
    const Params pr(2, 2, 2);
    const PointSet net = generate_net(2, 2, 2);
    const Json j = point_set_to_json(net, &pr);
    CHECK(j.at("b") == 2);
    CHECK(j.at("m") == 2);
    CHECK(j.at("d") == 2);

    const PointSet back = point_set_from_json(j);
    REQUIRE(back.points.size() == net.points.size());
    CHECK(back.dim == net.dim);
    for (std::size_t i = 0; i < net.points.size(); ++i) {
        CHECK(back.points[i].coords == net.points[i].coords);
        REQUIRE(back.points[i].exact.size() == net.points[i].exact.size());
        for (std::size_t jx = 0; jx < net.points[i].exact.size(); ++jx) {
            CHECK(back.points[i].exact[jx].numerator == net.points[i].exact[jx].numerator);
            CHECK(back.points[i].exact[jx].exponent == net.points[i].exact[jx].exponent);
        }
    }
    CHECK(base_hint_from_json(j) == std::optional<std::uint32_t>{2});
    CHECK(order_hint_from_json(j) == std::optional<std::uint32_t>{2});
}

TEST_CASE("point set parsing validates the schema") {
    CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"points":[[0.5]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"d":1,"points":[[1.5]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"d":2,"points":[[0.5]]})")),
                    std::invalid_argument);
    const PointSet ps = point_set_from_json(Json::parse(R"({"d":2,"points":[[0.5,0.25]]})"));
    CHECK(ps.points.size() == 1);
    CHECK(ps.points[0].exact.empty());
}

TEST_CASE("pattern schema matches the documented form") {
    const Pattern pat = make_pattern(Params(2, 1, 2), {{0, 0}, {1, 1}});
    const Json j = pattern_to_json(pat);
    CHECK(j.dump() == R"({"b":2,"m":1,"d":2,"cells":[[0,0],[1,1]]})");
    const Pattern back = pattern_from_json(j);
    CHECK(back.cells == pat.cells);
    CHECK(back.params.same_grid(pat.params));
}

TEST_CASE("search result schema") {
    CHECK(search_result_to_json(std::nullopt).dump() == R"({"found":false})");
    SearchResult res;
    res.pattern = make_pattern(Params(2, 1, 2), {{0, 0}, {1, 1}});
    res.point_indices = {3, 1};
    const Json j = search_result_to_json(res);
    CHECK(j.at("found") == true);
    CHECK(j.at("pattern").dump() == "[[0,0],[1,1]]");
    CHECK(j.at("point_indices").dump() == "[3,1]");
}

TEST_CASE("sandwich report serializes log-domain fields") {
    const auto rep = containment_sandwich(Params(2, 1, 2, 4));
    const Json j = sandwich_to_json(rep);
    CHECK(j.at("pz_lower").get<double>() == doctest::Approx(110.0 / 183.0));
    CHECK(j.at("A").at("log10").get<double>() == doctest::Approx(std::log10(2.0)));
    CHECK(j.at("A_mode") == "exact-d2");
}

TEST_CASE("census serialization") {
    const auto census = overlap_census(enumerate_patterns(Params(2, 1, 2)));
    const Json j = census_to_json(census, Params(2, 1, 2));
    CHECK(j.at("A") == 2);
    CHECK(j.at("M") == 1);
    CHECK(j.at("M_constant") == true);
    CHECK(j.at("Q") == 0);
    CHECK(j.at("N_ell").dump() == "[1,0,0]");
}

TEST_CASE("experiment record serialization") {
    ExperimentRecord rec;
    rec.params = Params(2, 1, 2, 4);
    rec.trials = 10;
    rec.successes = 5;
    rec.p_hat = 0.5;
    rec.master_seed = 9;
    const Json j = record_to_json(rec);
    CHECK(j.at("N") == 4);
    CHECK(j.at("seed") == 9);
    CHECK(j.at("exact").is_null());
}

}  // TEST_SUITE
