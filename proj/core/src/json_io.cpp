#include "omdnet/json_io.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace omdnet {

namespace {

Json log10_json(double natural_log) {
    const double v = natural_log / std::log(10.0);
    if (std::isfinite(v)) return Json{{"log10", v}};
    return Json{{"log10", nullptr}};
}

const char* count_mode_name(PatternCountMode mode) {
    switch (mode) {
        case PatternCountMode::exact_2d: return "exact-d2";
        case PatternCountMode::exact_enumerated: return "exact-enumerated";
        case PatternCountMode::upper_bound: return "upper-bound";
    }
    return "unknown";
}

}  // namespace

Json point_set_to_json(const PointSet& points, const Params* params) {
    Json j;
    j["d"] = points.dim;
    if (params) {
        j["b"] = params->base;
        j["m"] = params->order;
    }
    Json coords = Json::array();
    Json exact = Json::array();
    bool any_exact = false;
    for (const Point& p : points.points) {
        coords.push_back(p.coords);
        if (!p.exact.empty()) {
            any_exact = true;
            Json per_point = Json::array();
            for (const ExactCoord& e : p.exact)
                per_point.push_back(Json::array({e.numerator, e.exponent}));
            exact.push_back(per_point);
        } else {
            exact.push_back(nullptr);
        }
    }
    j["points"] = coords;
    if (any_exact) j["exact"] = exact;
    return j;
}

PointSet point_set_from_json(const Json& j) {
    if (!j.contains("d") || !j.contains("points"))
        throw std::invalid_argument("point set JSON requires \"d\" and \"points\"");
    PointSet out;
    out.dim = j.at("d").get<std::uint32_t>();
    if (out.dim < 1) throw std::invalid_argument("dimension must be >= 1");

    const Json& coords = j.at("points");
    const Json* exact = j.contains("exact") ? &j.at("exact") : nullptr;
    if (exact && exact->size() != coords.size())
        throw std::invalid_argument("\"exact\" must match \"points\" in length");

    out.points.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        Point p;
        p.coords = coords[i].get<std::vector<double>>();
        if (p.coords.size() != out.dim)
            throw std::invalid_argument("point dimension mismatch in JSON");
        for (double x : p.coords)
            if (!(x >= 0.0 && x < 1.0))
                throw std::invalid_argument("coordinate outside [0,1)");
        if (exact && !(*exact)[i].is_null()) {
            const Json& per_point = (*exact)[i];
            if (per_point.size() != out.dim)
                throw std::invalid_argument("exact form dimension mismatch in JSON");
            p.exact.reserve(out.dim);
            for (const Json& pair : per_point) {
                if (!pair.is_array() || pair.size() != 2)
                    throw std::invalid_argument("exact coordinates are [numerator, exponent] pairs");
                p.exact.push_back({pair[0].get<std::uint64_t>(), pair[1].get<std::uint32_t>()});
            }
        }
        out.points.push_back(std::move(p));
    }
    return out;
}

std::optional<std::uint32_t> base_hint_from_json(const Json& j) {
    if (j.contains("b")) return j.at("b").get<std::uint32_t>();
    return std::nullopt;
}

std::optional<std::uint32_t> order_hint_from_json(const Json& j) {
    if (j.contains("m")) return j.at("m").get<std::uint32_t>();
    return std::nullopt;
}

Json pattern_to_json(const Pattern& pattern) {
    Json j;
    j["b"] = pattern.params.base;
    j["m"] = pattern.params.order;
    j["d"] = pattern.params.dim;
    j["cells"] = pattern.cells;
    return j;
}

Pattern pattern_from_json(const Json& j) {
    const Params params(j.at("b").get<std::uint32_t>(), j.at("m").get<std::uint32_t>(),
                        j.at("d").get<std::uint32_t>());
    return make_pattern(params, j.at("cells").get<std::vector<Cell>>());
}

Json net_check_to_json(const NetCheckResult& result) {
    Json j;
    j["is_net"] = result.ok;
    if (result.violation) {
        Json w;
        if (result.violation->size_mismatch) {
            w["kind"] = "size";
            w["points_found"] = result.violation->count;
        } else {
            w["kind"] = "interval";
            w["c"] = result.violation->shape;
            w["a"] = result.violation->offset;
            w["points_found"] = result.violation->count;
        }
        j["witness"] = w;
    }
    return j;
}

Json census_to_json(const OverlapCensus& census, const Params& params) {
    Json j;
    j["b"] = params.base;
    j["m"] = params.order;
    j["d"] = params.dim;
    j["A"] = census.pattern_count;
    j["N_ell"] = census.pair_overlap_counts;
    j["M"] = census.multiplicity_constant ? Json(census.multiplicity_min)
                                          : Json{{"min", census.multiplicity_min},
                                                 {"max", census.multiplicity_max}};
    j["M_constant"] = census.multiplicity_constant;
    j["Q"] = census.total_overlap;
    j["N0_lower_bound"] = census.n0_lower_bound;
    return j;
}

Json sandwich_to_json(const SandwichReport& report) {
    Json j;
    j["b"] = report.params.base;
    j["m"] = report.params.order;
    j["d"] = report.params.dim;
    j["N"] = report.params.n_points;
    j["p_target"] = report.p_target;
    j["mean_count"] = log10_json(report.log_mean_count);
    j["pz_lower"] = report.pz_lower;
    j["markov_upper"] = report.markov_upper;
    j["A"] = log10_json(report.log_pattern_count);
    j["A_mode"] = count_mode_name(report.count_mode);
    if (report.pz_factor_negative) j["pz_factor_negative"] = true;
    return j;
}

Json search_result_to_json(const std::optional<SearchResult>& result) {
    Json j;
    j["found"] = result.has_value();
    if (result) {
        j["pattern"] = result->pattern.cells;
        j["point_indices"] = result->point_indices;
    }
    return j;
}

Json record_to_json(const ExperimentRecord& record) {
    Json j;
    j["b"] = record.params.base;
    j["m"] = record.params.order;
    j["d"] = record.params.dim;
    j["N"] = record.params.n_points;
    j["trials"] = record.trials;
    j["successes"] = record.successes;
    j["p_hat"] = record.p_hat;
    j["ci_low"] = record.ci_low;
    j["ci_high"] = record.ci_high;
    j["pz_lower"] = record.pz_lower;
    j["markov_upper"] = record.markov_upper;
    j["exact"] = record.exact ? Json(*record.exact) : Json(nullptr);
    j["seed"] = record.master_seed;
    return j;
}

}  // namespace omdnet
