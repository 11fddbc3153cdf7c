// rotlab: exact rotation/parabola laboratory for planar point sets.
//
// generate   point-set families (grid, random, collinear, lower-bound)
// census     enumerate and deduplicate all equal-distance rotations
// classify   per-rotation multiplicity and joint/flat table
// surfaces   special surfaces from the flat rotations of a set
// polyfit    exact vanishing polynomial through 3-D points
// experiment census sweeps with N_{>=k} ratio tables and exponent fits
// verify     randomized invariant suites

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotlab/census.hpp"
#include "rotlab/experiment.hpp"
#include "rotlab/fit.hpp"
#include "rotlab/generators.hpp"
#include "rotlab/io.hpp"
#include "rotlab/surface.hpp"
#include "rotlab/tripoly.hpp"
#include "rotlab/verify.hpp"

namespace {

using namespace rotlab;

Family parse_family(const std::string& name) {
    if (name == "grid") return Family::Grid;
    if (name == "random") return Family::Random;
    if (name == "collinear") return Family::Collinear;
    if (name == "lower-bound") return Family::LowerBound;
    throw CLI::ValidationError("--family", "unknown family '" + name + "'");
}

std::vector<int> parse_sizes(const std::string& text) {
    const auto dots = text.find("..");
    std::vector<int> sizes;
    if (dots == std::string::npos) {
        sizes.push_back(std::stoi(text));
        return sizes;
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("--sizes", "range upper bound below lower");
    for (int s = lo; s <= hi; ++s) sizes.push_back(s);
    return sizes;
}

int cmd_generate(const std::string& family, int rows, int cols, int s,
                 std::uint64_t seed, long coord_range, long denom_bound,
                 const std::string& out) {
    FamilySpec spec;
    spec.family = parse_family(family);
    spec.rows = rows;
    spec.cols = cols;
    spec.size = s;
    spec.seed = seed;
    spec.coord_range = coord_range;
    spec.denom_bound = denom_bound;
    const PointSet pts = generate(spec);
    write_pointset_file(out, pts);
    std::cerr << "wrote " << pts.size() << " points to " << out << "\n";
    return 0;
}

int cmd_census(const std::string& in, bool include_identity, bool float_fast,
               const std::string& out, const std::string& csv_out) {
    const PointSet pts = read_pointset_file(in);
    if (float_fast) {
        const auto nk = float_census_nk(pts);
        nlohmann::ordered_json j;
        j["s"] = pts.size();
        nlohmann::ordered_json jnk = nlohmann::ordered_json::object();
        for (const auto& [k, n] : nk) jnk[std::to_string(k)] = n;
        j["nk"] = std::move(jnk);
        j["float_fast"] = true;
        write_text_file(out, j.dump(2) + "\n");
        std::cerr << "float-fast census of " << pts.size() << " points -> " << out << "\n";
        return 0;
    }
    CensusOptions opts;
    opts.include_identity = include_identity;
    const RotationCensus census = rotation_census(pts, opts);
    write_text_file(out, census_to_json_text(census));
    if (!csv_out.empty()) write_text_file(csv_out, census_rows_to_csv_text(census));
    std::cerr << "census of " << pts.size() << " points: " << census.entries().size()
              << " rotations, K=" << census.quadruple_count() << " -> " << out << "\n";
    return 0;
}

int cmd_classify(const std::string& in) {
    const PointSet pts = read_pointset_file(in);
    const RotationCensus census = rotation_census(pts, {});
    std::cout << census_rows_to_csv_text(census);
    std::cerr << "s=" << census.point_count() << " x=" << census.distance_class_count()
              << " K=" << census.quadruple_count() << " joints=" << census.joint_count()
              << " flats=" << census.flat_count()
              << " chart_excluded=" << census.chart_excluded_count() << "\n";
    return 0;
}

int cmd_surfaces(const std::string& in, const std::string& out) {
    const PointSet pts = read_pointset_file(in);
    const RotationCensus census = rotation_census(pts, {});

    nlohmann::ordered_json surfaces = nlohmann::ordered_json::array();
    long long flats = 0, half_turns = 0;
    std::vector<SpecialSurface> built;
    for (const auto& e : census.entries()) {
        if (e.classification != MotionClass::Flat) continue;
        ++flats;
        if (e.rotation.is_half_turn_frame()) {
            // The chart has no surface for half-turn flats; tallied apart.
            ++half_turns;
            continue;
        }
        const auto sources = source_set(e.rotation, pts);
        const SpecialSurface sigma =
            surface_from_rotation_line(e.rotation, sources[0], sources[1] - sources[0]);
        surfaces.push_back(nlohmann::ordered_json::parse(surface_to_json_text(sigma)));
        built.push_back(sigma);
    }
    long long distinct = 0;
    std::vector<std::vector<Rational>> keys;
    for (const auto& sigma : built) {
        auto key = sigma.canonical_key();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            keys.push_back(std::move(key));
            ++distinct;
        }
    }
    nlohmann::ordered_json j;
    j["flat_rotations"] = flats;
    j["half_turn_excluded"] = half_turns;
    j["surfaces"] = std::move(surfaces);
    j["distinct_surfaces"] = distinct;
    write_text_file(out, j.dump(2) + "\n");
    std::cerr << "built " << built.size() << " surfaces (" << distinct << " distinct) from "
              << flats << " flat rotations -> " << out << "\n";
    return 0;
}

int cmd_polyfit(const std::string& points_file, const std::string& out) {
    const auto pts = xyz_points_from_json_text(read_text_file(points_file));
    const TriPoly p = fit_vanishing(pts);
    const std::string text = tripoly_to_json_text(p);
    if (out.empty()) std::cout << text;
    else write_text_file(out, text);
    std::cerr << "fitted degree-" << p.degree() << " polynomial (cap degree "
              << fit_degree_for(pts.size()) << ") vanishing on " << pts.size() << " points\n";
    return 0;
}

int cmd_experiment(const std::string& family, const std::string& sizes_text, int kmax,
                   const std::string& report, const std::string& out, std::uint64_t seed,
                   bool no_timings, bool with_incidences) {
    FamilySpec base;
    base.family = parse_family(family);
    base.seed = seed;
    ExperimentOptions opts;
    opts.kmax = kmax;
    opts.timings = !no_timings;
    opts.with_incidences = with_incidences;
    const ExperimentReport rep = run_experiment(base, parse_sizes(sizes_text), opts);
    const std::string text =
        report == "csv" ? experiment_to_csv_text(rep) : experiment_to_json_text(rep);
    if (out.empty()) std::cout << text;
    else write_text_file(out, text);
    if (rep.ngeq3_fit)
        std::cerr << "N_{>=3} log-log slope " << rep.ngeq3_fit->slope << " over "
                  << rep.ngeq3_fit->points << " sizes\n";
    return 0;
}

int cmd_verify(const std::string& suite, long long cases, std::uint64_t seed,
               bool negative_control) {
    VerifyOptions opts;
    opts.cases = cases;
    opts.seed = seed;
    opts.negative_control = negative_control;
    const VerifyReport report = verify_suite(suite, opts);
    std::cout << format_verify_report(report);
    return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotlab: exact rotations, h-parabolas, and censuses"};
    app.require_subcommand(1);

    std::string family = "grid", in, out, csv_out, sizes_text = "3..6", report = "json";
    std::string suite = "all", points_file;
    int rows = 3, cols = 3, s = 8, kmax = 0;
    std::uint64_t seed = 0;
    long coord_range = 16, denom_bound = 8;
    long long cases = 100;
    bool include_identity = false, float_fast = false, no_timings = false;
    bool with_incidences = false, negative_control = false;

    auto* gen = app.add_subcommand("generate", "emit a point-set family");
    gen->add_option("--family", family, "grid|random|collinear|lower-bound");
    gen->add_option("--rows", rows, "grid rows");
    gen->add_option("--cols", cols, "grid cols");
    gen->add_option("--s", s, "size for random/collinear/lower-bound");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--coord-range", coord_range, "random coordinate range");
    gen->add_option("--denom-bound", denom_bound, "random denominator bound");
    gen->add_option("--out", out, "output file (.json or .csv)")->required();

    auto* cen = app.add_subcommand("census", "rotation census of a point set");
    cen->add_option("--in", in, "point set file")->required();
    cen->add_flag("--include-identity", include_identity, "append the identity entry");
    cen->add_flag("--float-fast", float_fast, "floating-point fast path (eps 1e-9)");
    cen->add_option("--out", out, "census JSON report")->required();
    cen->add_option("--csv-out", csv_out, "also write per-rotation CSV rows");

    auto* cls = app.add_subcommand("classify", "print per-rotation classification table");
    cls->add_option("--in", in, "point set file")->required();

    auto* sur = app.add_subcommand("surfaces", "special surfaces from flat rotations");
    sur->add_option("--in", in, "point set file")->required();
    bool from_flat = false;
    sur->add_flag("--from-flat-rotations", from_flat, "build from census flat rotations");
    sur->add_option("--out", out, "surfaces JSON report")->required();

    auto* fit = app.add_subcommand("polyfit", "vanishing polynomial through 3-D points");
    fit->add_option("--points", points_file, "xyz points JSON file")->required();
    fit->add_option("--out", out, "output file (stdout when omitted)");

    auto* exp = app.add_subcommand("experiment", "census sweep and scaling report");
    exp->add_option("--family", family, "grid|random|collinear|lower-bound");
    exp->add_option("--sizes", sizes_text, "size range A..B or single size");
    exp->add_option("--kmax", kmax, "largest k in tables (0 = all observed)");
    exp->add_option("--report", report, "csv|json");
    exp->add_option("--seed", seed, "random seed");
    exp->add_option("--out", out, "output file (stdout when omitted)");
    exp->add_flag("--no-timings", no_timings, "pin wall_ms to 0 for byte-stable output");
    exp->add_flag("--with-incidences", with_incidences, "count I(P, C) per size");

    auto* ver = app.add_subcommand("verify", "randomized invariant suites");
    ver->add_option("--suite", suite, "core|lift|census|surfaces|polymethod|all");
    ver->add_option("--cases", cases, "random cases per suite");
    ver->add_option("--seed", seed, "random seed");
    ver->add_flag("--negative-control", negative_control,
                  "inject a broken rotation builder (failures expected)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(family, rows, cols, s, seed, coord_range, denom_bound, out);
        if (cen->parsed()) return cmd_census(in, include_identity, float_fast, out, csv_out);
        if (cls->parsed()) return cmd_classify(in);
        if (sur->parsed()) return cmd_surfaces(in, out);
        if (fit->parsed()) return cmd_polyfit(points_file, out);
        if (exp->parsed())
            return cmd_experiment(family, sizes_text, kmax, report, out, seed, no_timings,
                                  with_incidences);
        if (ver->parsed()) return cmd_verify(suite, cases, seed, negative_control);
    } catch (const rotlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
