// omdnet: construction, verification, counting, probability bounds, subset
// search, and seeded Monte Carlo experiments for (0,m,d)-nets in base b.
#include "omdnet/constructions.hpp"
#include "omdnet/errors.hpp"
#include "omdnet/experiments.hpp"
#include "omdnet/json_io.hpp"
#include "omdnet/netcheck.hpp"
#include "omdnet/patterns.hpp"
#include "omdnet/probability.hpp"
#include "omdnet/search.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using omdnet::Json;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

void emit_json(const Json& j, const std::string& out_path) {
    write_output(j.dump(2) + "\n", out_path);
}

Json read_json_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return Json::parse(buf.str());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

// flags win; file hints fill the gaps and must not contradict a given flag
omdnet::Params resolve_params(const Json& file, std::optional<std::uint32_t> base,
                              std::optional<std::uint32_t> order,
                              std::optional<std::uint32_t> dim) {
    const auto file_base = omdnet::base_hint_from_json(file);
    const auto file_order = omdnet::order_hint_from_json(file);
    if (base && file_base && *base != *file_base)
        throw std::invalid_argument("--base contradicts the \"b\" field of the input file");
    if (order && file_order && *order != *file_order)
        throw std::invalid_argument("-m contradicts the \"m\" field of the input file");
    if (!base) base = file_base;
    if (!order) order = file_order;
    if (!base) throw std::invalid_argument("base is required (flag --base or file field \"b\")");
    if (!order) throw std::invalid_argument("order is required (flag -m or file field \"m\")");
    const auto file_dim = file.at("d").get<std::uint32_t>();
    if (dim && *dim != file_dim)
        throw std::invalid_argument("-d contradicts the \"d\" field of the input file");
    return omdnet::Params(*base, *order, file_dim);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(0,m,d)-net toolkit: nets, patterns, containment probabilities"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check the net property of a point set");
    std::string verify_input, verify_out;
    std::optional<std::uint32_t> verify_b, verify_m, verify_d;
    verify->add_option("--input", verify_input, "point-set JSON file (- for stdin)")->required();
    verify->add_option("--base,-b", verify_b, "base");
    verify->add_option("-m", verify_m, "order");
    verify->add_option("-d", verify_d, "dimension (cross-checked against the file)");
    verify->add_option("--out", verify_out, "output file");
    verify->callback([&] {
        const Json file = read_json_file(verify_input);
        const omdnet::Params params = resolve_params(file, verify_b, verify_m, verify_d);
        const omdnet::PointSet points = omdnet::point_set_from_json(file);
        omdnet::validate_point_set(points, params.base);
        emit_json(omdnet::net_check_to_json(omdnet::is_net(points, params)), verify_out);
    });

    // discrepancy
    auto* discrepancy = app.add_subcommand("discrepancy", "exact star discrepancy");
    std::string disc_input, disc_out;
    discrepancy->add_option("--input", disc_input, "point-set JSON file (- for stdin)")
        ->required();
    discrepancy->add_option("--out", disc_out, "output file");
    discrepancy->callback([&] {
        const omdnet::PointSet points = omdnet::point_set_from_json(read_json_file(disc_input));
        Json j;
        j["n"] = points.points.size();
        j["d"] = points.dim;
        j["star_discrepancy"] = omdnet::star_discrepancy(points);
        emit_json(j, disc_out);
    });

    // construct
    auto* construct = app.add_subcommand("construct", "generate a (0,m,d)-net in a prime base");
    std::uint32_t con_b = 2, con_m = 0, con_d = 1;
    std::string con_out;
    construct->add_option("--base,-b", con_b, "prime base")->required();
    construct->add_option("-m", con_m, "order")->required();
    construct->add_option("-d", con_d, "dimension (at most base+1)")->required();
    construct->add_option("--out", con_out, "output file");
    construct->callback([&] {
        const omdnet::PointSet net = omdnet::generate_net(con_b, con_m, con_d);
        const omdnet::Params params(con_b, con_m, con_d);
        emit_json(omdnet::point_set_to_json(net, &params), con_out);
    });

    // sample
    auto* sample = app.add_subcommand("sample", "draw seeded uniform points");
    std::uint32_t sam_d = 1;
    std::uint64_t sam_n = 0, sam_seed = 0;
    std::optional<std::uint32_t> sam_b, sam_m;
    std::string sam_out;
    sample->add_option("-d", sam_d, "dimension")->required();
    sample->add_option("-N", sam_n, "number of points")->required();
    sample->add_option("--seed", sam_seed, "stream seed")->required();
    sample->add_option("--base,-b", sam_b, "base metadata for downstream tools");
    sample->add_option("-m", sam_m, "order metadata for downstream tools");
    sample->add_option("--out", sam_out, "output file");
    sample->callback([&] {
        const omdnet::Params params(sam_b.value_or(2), sam_m.value_or(0), sam_d, sam_n);
        const omdnet::PointSet points = omdnet::sample_uniform(params, sam_seed, sam_n);
        if (sam_b && sam_m) {
            const omdnet::Params meta(*sam_b, *sam_m, sam_d, sam_n);
            emit_json(omdnet::point_set_to_json(points, &meta), sam_out);
        } else {
            emit_json(omdnet::point_set_to_json(points, nullptr), sam_out);
        }
    });

    // patterns count|enumerate|census
    auto* patterns = app.add_subcommand("patterns", "admissible-pattern tooling");
    patterns->require_subcommand(1);
    std::uint32_t pat_b = 2, pat_m = 0, pat_d = 1;
    std::string pat_out;
    auto add_pattern_options = [&](CLI::App* cmd) {
        cmd->add_option("--base,-b", pat_b, "base")->required();
        cmd->add_option("-m", pat_m, "order")->required();
        cmd->add_option("-d", pat_d, "dimension")->required();
        cmd->add_option("--out", pat_out, "output file");
    };
    auto* pat_count = patterns->add_subcommand("count", "count admissible patterns");
    add_pattern_options(pat_count);
    pat_count->callback([&] {
        const omdnet::Params params(pat_b, pat_m, pat_d);
        Json j;
        j["b"] = pat_b;
        j["m"] = pat_m;
        j["d"] = pat_d;
        if (pat_d == 1) {
            j["mode"] = "exact-enumerated";
            j["count"] = "1";
            j["log10"] = 0.0;
        } else if (pat_d == 2) {
            const auto count = omdnet::pattern_count_exact_2d(pat_b, pat_m);
            j["mode"] = "exact-d2";
            if (count.exact) j["count"] = count.exact->str();
            j["log10"] = count.log_value / std::log(10.0);
        } else if (omdnet::within_enumeration_guard(params)) {
            const auto family = omdnet::enumerate_patterns(params);
            j["mode"] = "exact-enumerated";
            j["count"] = std::to_string(family.size());
            j["log10"] = family.empty() ? nullptr
                                        : Json(std::log10(static_cast<double>(family.size())));
        } else {
            j["mode"] = "upper-bound";
            j["log10"] = omdnet::pattern_count_upper_log(params) / std::log(10.0);
        }
        emit_json(j, pat_out);
    });
    auto* pat_enum = patterns->add_subcommand("enumerate", "list every admissible pattern");
    add_pattern_options(pat_enum);
    pat_enum->callback([&] {
        const omdnet::Params params(pat_b, pat_m, pat_d);
        const auto family = omdnet::enumerate_patterns(params);
        Json j;
        j["b"] = pat_b;
        j["m"] = pat_m;
        j["d"] = pat_d;
        j["count"] = family.size();
        Json list = Json::array();
        for (const omdnet::Pattern& p : family) list.push_back(p.cells);
        j["patterns"] = list;
        emit_json(j, pat_out);
    });
    auto* pat_census = patterns->add_subcommand("census", "pairwise overlap census");
    add_pattern_options(pat_census);
    pat_census->callback([&] {
        const omdnet::Params params(pat_b, pat_m, pat_d);
        const auto census = omdnet::overlap_census(omdnet::enumerate_patterns(params));
        emit_json(omdnet::census_to_json(census, params), pat_out);
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "containment sandwich and occupancy bounds");
    std::uint32_t bou_b = 2, bou_m = 0, bou_d = 1;
    std::uint64_t bou_n = 0;
    std::string bou_out;
    bounds->add_option("--base,-b", bou_b, "base")->required();
    bounds->add_option("-m", bou_m, "order")->required();
    bounds->add_option("-d", bou_d, "dimension")->required();
    bounds->add_option("-N", bou_n, "number of random points")->required();
    bounds->add_option("--out", bou_out, "output file");
    bounds->callback([&] {
        const omdnet::Params params(bou_b, bou_m, bou_d, bou_n);
        Json j = omdnet::sandwich_to_json(omdnet::containment_sandwich(params));
        const auto occ = omdnet::occupancy_bounds(params);
        j["p_lower"] = occ.lower;
        j["p_upper"] = occ.upper;
        if (omdnet::within_enumeration_guard(params)) {
            try {
                j["exact"] = omdnet::containment_exact(params);
            } catch (const omdnet::size_guard_error&) {
                j["exact"] = nullptr;
            }
        } else {
            j["exact"] = nullptr;
        }
        emit_json(j, bou_out);
    });

    // thresholds
    auto* thresholds = app.add_subcommand("thresholds", "sufficient and necessary sample counts");
    std::uint32_t thr_b = 2, thr_m = 0, thr_d = 1;
    double thr_eps = 0.0;
    std::string thr_out;
    thresholds->add_option("--base,-b", thr_b, "base")->required();
    thresholds->add_option("-m", thr_m, "order")->required();
    thresholds->add_option("-d", thr_d, "dimension")->required();
    thresholds->add_option("--eps", thr_eps, "headroom factor for the sufficient count");
    thresholds->add_option("--out", thr_out, "output file");
    thresholds->callback([&] {
        Json j;
        j["b"] = thr_b;
        j["m"] = thr_m;
        j["d"] = thr_d;
        j["eps"] = thr_eps;
        if (thr_eps == 0.0) j["eps_is_zero"] = true;  // exploratory setting
        j["sufficient_N"] = omdnet::sufficient_sample_count(thr_b, thr_d, thr_m, thr_eps);
        const auto nb = omdnet::necessary_sample_count(thr_b, thr_d, thr_m);
        j["necessary_N"] = nb.value;
        if (nb.has_closed_form) j["necessary_closed_form"] = nb.closed_form;
        if (thr_b >= 3) {
            const auto fr = omdnet::factorial_ratio_bound(thr_b);
            j["factorial_ratio"] = Json{{"lhs", fr.lhs}, {"rhs", fr.rhs}};
        }
        emit_json(j, thr_out);
    });

    // find
    auto* find = app.add_subcommand("find", "extract a net subset from a point set");
    std::string find_input, find_out, find_strategy = "auto";
    std::optional<std::uint32_t> find_b, find_m, find_d;
    find->add_option("--input", find_input, "point-set JSON file (- for stdin)")->required();
    find->add_option("--base,-b", find_b, "base");
    find->add_option("-m", find_m, "order");
    find->add_option("-d", find_d, "dimension (cross-checked against the file)");
    find->add_option("--strategy", find_strategy, "enumerate, backtrack, or auto")
        ->check(CLI::IsMember({"enumerate", "backtrack", "auto"}));
    find->add_option("--out", find_out, "output file");
    find->callback([&] {
        const Json file = read_json_file(find_input);
        const omdnet::Params params = resolve_params(file, find_b, find_m, find_d);
        const omdnet::PointSet points = omdnet::point_set_from_json(file);
        omdnet::validate_point_set(points, params.base);
        omdnet::SearchStrategy strategy = omdnet::SearchStrategy::automatic;
        if (find_strategy == "enumerate") strategy = omdnet::SearchStrategy::enumerate;
        if (find_strategy == "backtrack") strategy = omdnet::SearchStrategy::backtrack;
        emit_json(omdnet::search_result_to_json(omdnet::find_net_subset(points, params, strategy)),
                  find_out);
    });

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo containment estimate");
    std::uint32_t sim_b = 2, sim_m = 0, sim_d = 1;
    std::uint64_t sim_n = 0, sim_trials = 0, sim_seed = 0;
    unsigned sim_threads = 1;
    std::string sim_out;
    simulate->add_option("--base,-b", sim_b, "base")->required();
    simulate->add_option("-m", sim_m, "order")->required();
    simulate->add_option("-d", sim_d, "dimension")->required();
    simulate->add_option("-N", sim_n, "points per trial")->required();
    simulate->add_option("--trials", sim_trials, "number of trials")->required();
    simulate->add_option("--seed", sim_seed, "master seed")->required();
    simulate->add_option("--threads", sim_threads, "worker threads (output-invariant)");
    simulate->add_option("--out", sim_out, "output file");
    simulate->callback([&] {
        const omdnet::Params params(sim_b, sim_m, sim_d, sim_n);
        emit_json(omdnet::record_to_json(
                      omdnet::estimate_containment(params, sim_trials, sim_seed, sim_threads)),
                  sim_out);
    });

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "containment estimates across an N list");
    std::uint32_t swp_b = 2, swp_m = 0, swp_d = 1;
    std::vector<std::uint64_t> swp_n;
    std::uint64_t swp_trials = 0, swp_seed = 0;
    double swp_eps = 0.0;
    unsigned swp_threads = 1;
    std::string swp_out, swp_format = "csv";
    sweep_cmd->add_option("--base,-b", swp_b, "base")->required();
    sweep_cmd->add_option("-m", swp_m, "order")->required();
    sweep_cmd->add_option("-d", swp_d, "dimension")->required();
    sweep_cmd->add_option("-N", swp_n, "strictly increasing N list (comma separated)")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--trials", swp_trials, "trials per N")->required();
    sweep_cmd->add_option("--seed", swp_seed, "master seed")->required();
    sweep_cmd->add_option("--eps", swp_eps, "headroom factor for the sufficient threshold");
    sweep_cmd->add_option("--threads", swp_threads, "worker threads (output-invariant)");
    sweep_cmd->add_option("--format", swp_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep_cmd->add_option("--out", swp_out, "output file");
    sweep_cmd->callback([&] {
        const omdnet::Params base(swp_b, swp_m, swp_d);
        const auto result =
            omdnet::sweep(base, swp_n, swp_trials, swp_seed, swp_eps, swp_threads);
        if (swp_format == "csv") {
            write_output(omdnet::sweep_csv(result), swp_out);
            return;
        }
        Json j;
        j["sufficient_N"] = result.sufficient_n;
        j["necessary_N"] = result.necessary_n;
        if (result.nearest_sufficient) j["nearest_sufficient_row"] = *result.nearest_sufficient;
        if (result.nearest_necessary) j["nearest_necessary_row"] = *result.nearest_necessary;
        Json rows = Json::array();
        for (const auto& rec : result.records) rows.push_back(omdnet::record_to_json(rec));
        j["records"] = rows;
        emit_json(j, swp_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
