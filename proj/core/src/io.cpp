#include "rotlab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rotlab {

namespace {

using ordered_json = nlohmann::ordered_json;

ParseError at_byte(const std::string& text, std::size_t byte, const std::string& msg) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return ParseError(msg, line, col);
}

ParseError at_token(const std::string& text, const std::string& token, const std::string& msg) {
    const std::size_t pos = text.find(token);
    if (pos == std::string::npos) return ParseError(msg, 0, 0);
    return at_byte(text, pos, msg);
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw at_byte(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
}

Rational rational_field(const std::string& text, const ordered_json& j) {
    if (!j.is_string())
        throw at_token(text, j.dump(), "expected rational string");
    const std::string s = j.get<std::string>();
    try {
        return Rational::from_string(s);
    } catch (const Error& e) {
        throw at_token(text, s, e.what());
    }
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

std::string pointset_to_json_text(const PointSet& s) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : s)
        pts.push_back({p.x.to_string(), p.y.to_string()});
    ordered_json j;
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

PointSet pointset_from_json_text(const std::string& text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ParseError("point set: missing \"points\" array", 1, 1);
    std::vector<PlanarPoint> pts;
    for (const auto& entry : j["points"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw at_token(text, entry.dump(), "point must be a 2-element array");
        pts.emplace_back(rational_field(text, entry[0]), rational_field(text, entry[1]));
    }
    return PointSet(std::move(pts));
}

std::string pointset_to_csv_text(const PointSet& s) {
    std::string out = "x,y\n";
    for (const auto& p : s)
        out += p.x.to_string() + "," + p.y.to_string() + "\n";
    return out;
}

PointSet pointset_from_csv_text(const std::string& text) {
    std::vector<PlanarPoint> pts;
    std::istringstream in(text);
    std::string row;
    int line = 0;
    while (std::getline(in, row)) {
        ++line;
        if (row.empty()) continue;
        if (line == 1 && row == "x,y") continue;
        const std::size_t comma = row.find(',');
        if (comma == std::string::npos)
            throw ParseError("csv row needs two columns", line, 1);
        try {
            Rational x = Rational::from_string(row.substr(0, comma));
            Rational y = Rational::from_string(row.substr(comma + 1));
            pts.emplace_back(std::move(x), std::move(y));
        } catch (const Error& e) {
            throw ParseError(e.what(), line, 1);
        }
    }
    return PointSet(std::move(pts));
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

PointSet read_pointset_file(const std::string& path) {
    const std::string text = read_text_file(path);
    if (ends_with(path, ".csv")) return pointset_from_csv_text(text);
    return pointset_from_json_text(text);
}

void write_pointset_file(const std::string& path, const PointSet& s) {
    if (ends_with(path, ".csv")) write_text_file(path, pointset_to_csv_text(s));
    else write_text_file(path, pointset_to_json_text(s));
}

std::string census_to_json_text(const RotationCensus& census) {
    const auto [nk, ngeq] = nk_tables(census);
    ordered_json j;
    j["s"] = census.point_count();
    j["x"] = census.distance_class_count();
    j["K"] = census.quadruple_count();
    // Ordered quadruples satisfy sum k(k-1) N_k = K; the unordered reading
    // sum C(k,2) N_k comes out half. Both are reported.
    j["K_unordered"] = census.quadruple_count() / 2;
    ordered_json jnk = ordered_json::object();
    for (const auto& [k, n] : nk) jnk[std::to_string(k)] = n;
    j["nk"] = std::move(jnk);
    ordered_json jgeq = ordered_json::object();
    for (const auto& [k, n] : ngeq) jgeq[std::to_string(k)] = n;
    j["n_geq"] = std::move(jgeq);
    j["joints"] = census.joint_count();
    j["flats"] = census.flat_count();
    j["chart_excluded"] = census.chart_excluded_count();
    j["identity_included"] = census.identity_included();
    return j.dump(2) + "\n";
}

std::string census_rows_to_csv_text(const RotationCensus& census) {
    std::string out = "p1,p2,q1,q2,k,class\n";
    for (const auto& e : census.entries()) {
        out += e.rotation.p().x.to_string() + "," + e.rotation.p().y.to_string() + "," +
               e.rotation.q().x.to_string() + "," + e.rotation.q().y.to_string() + "," +
               std::to_string(e.multiplicity) + "," + to_string(e.classification) + "\n";
    }
    return out;
}

std::string xyz_points_to_json_text(const std::vector<XYZPoint>& pts) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts)
        arr.push_back({p.x.to_string(), p.y.to_string(), p.z.to_string()});
    ordered_json j;
    j["points"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::vector<XYZPoint> xyz_points_from_json_text(const std::string& text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ParseError("xyz points: missing \"points\" array", 1, 1);
    std::vector<XYZPoint> pts;
    for (const auto& entry : j["points"]) {
        if (!entry.is_array() || entry.size() != 3)
            throw at_token(text, entry.dump(), "point must be a 3-element array");
        pts.push_back({rational_field(text, entry[0]), rational_field(text, entry[1]),
                       rational_field(text, entry[2])});
    }
    return pts;
}

std::string tripoly_to_json_text(const TriPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : tripoly_terms(p))
        arr.push_back({t.i, t.j, t.k, t.coeff.to_string()});
    return arr.dump(2) + "\n";
}

TriPoly tripoly_from_json_text(const std::string& text) {
    const ordered_json j = parse_json(text);
    if (!j.is_array()) throw ParseError("tripoly: expected an array", 1, 1);
    std::vector<TriPolyTerm> terms;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 4)
            throw at_token(text, entry.dump(), "term must be [i, j, k, coeff]");
        terms.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>(),
                         rational_field(text, entry[3])});
    }
    return tripoly_from_terms(terms);
}

std::string surface_to_json_text(const SpecialSurface& sigma) {
    ordered_json j;
    j["lam"] = sigma.lam().to_string();
    j["mu"] = sigma.mu().to_string();
    auto quad = [](const QuadCoeffs& q) {
        return ordered_json{q[0].to_string(), q[1].to_string(), q[2].to_string()};
    };
    j["q3"] = quad(sigma.q3());
    j["q4"] = quad(sigma.q4());
    ordered_json free = ordered_json::array();
    for (int k = 3; k >= 0; --k) free.push_back(sigma.free_cubic().coeff(k).to_string());
    j["free"] = std::move(free);
    return j.dump(2) + "\n";
}

} // namespace rotlab
