#include "kstab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kstab::io {

using ratgeom::AffinePiece;
using ratgeom::Halfspace;
using ratgeom::LatticePolytope;
using ratgeom::PLFunction;
using toric::PolarizedToricPair;

json encode(const Rational& q) { return to_string(q); }

json encode(const Vec& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(encode(q));
    return out;
}

Rational decode_rational(const json& j) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational, got " + j.dump());
}

Vec decode_vec(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
    Vec v;
    for (const auto& e : j) v.push_back(decode_rational(e));
    return v;
}

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

void check_version(const json& j) {
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    if (j.contains("version") && j.at("version") != kSchemaVersion)
        throw ParseError("unsupported schema version " + j.at("version").dump());
}

std::vector<Vec> decode_points(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of points");
    std::vector<Vec> pts;
    for (const auto& p : j) pts.push_back(decode_vec(p));
    for (const auto& p : pts)
        if (p.size() != pts.front().size() || p.empty()) throw ParseError("points of mixed or zero dimension");
    return pts;
}

LatticePolytope parse_polytope(const json& j) {
    if (j.contains("vertices")) return LatticePolytope::hull(decode_points(j.at("vertices")));
    if (!j.contains("halfspaces")) throw ParseError("polytope needs 'vertices' or 'halfspaces'");
    std::vector<Halfspace> hs;
    std::vector<Vec> normals;
    for (const auto& h : j.at("halfspaces")) {
        hs.push_back({decode_vec(field(h, "normal")), decode_rational(field(h, "offset"))});
        normals.push_back(hs.back().normal);
    }
    if (hs.empty()) throw ParseError("empty halfspace list");
    const int n = static_cast<int>(normals.front().size());
    for (const auto& v : normals)
        if (static_cast<int>(v.size()) != n || n == 0) throw ParseError("halfspaces of mixed or zero dimension");
    // bounded iff the normals positively span
    auto cone = LatticePolytope::hull(normals);
    bool bounded = cone.is_full_dimensional();
    for (const auto& h : cone.halfspaces()) bounded = bounded && h.offset < 0;
    if (!bounded) throw GeometryError("halfspaces do not cut out a bounded polytope");
    return LatticePolytope::from_halfspaces(n, std::move(hs));
}

}  // namespace

InstanceSpec parse_instance(const json& j) {
    try {
        check_version(j);
        InstanceSpec spec;
        if (j.contains("polytope") || j.contains("rays")) {
            std::vector<Vec> rays;
            Vec l;
            if (j.contains("polytope")) {
                auto p = parse_polytope(j.at("polytope"));
                if (!p.is_full_dimensional()) throw GeometryError("polytope is not full-dimensional");
                for (const auto& h : p.halfspaces()) {
                    rays.push_back(h.normal);
                    l.push_back(-h.offset);
                }
            } else {
                rays = decode_points(j.at("rays"));
            }
            const json pol = j.value("polarization", json("fromPolytope"));
            if (pol.is_array()) {
                l = decode_vec(pol);
            } else if (pol != "fromPolytope" || l.empty()) {
                throw ParseError("polarization must be \"fromPolytope\" (with a polytope) or a coefficient list");
            }
            if (l.size() != rays.size()) throw ParseError("polarization needs one coefficient per ray");
            Vec boundary = zero_vec(static_cast<int>(rays.size()));
            for (const auto& b : j.value("boundary", json::array())) {
                Vec ray = decode_vec(field(b, "ray"));
                auto it = std::find(rays.begin(), rays.end(), ray);
                if (it == rays.end()) throw GeometryError("boundary ray " + to_string(ray) + " is not a ray of the fan");
                boundary[static_cast<std::size_t>(it - rays.begin())] = decode_rational(field(b, "coefficient"));
            }
            spec.pair = PolarizedToricPair::from_rays(std::move(rays), l, std::move(boundary));
        }
        if (j.contains("abstract")) {
            const auto& a = j.at("abstract");
            invariants::AbstractSlopeData d;
            d.n = field(a, "n").get<int>();
            d.Ln = decode_rational(field(a, "Ln"));
            d.LK = decode_rational(field(a, "LK"));
            if (a.contains("LN")) d.LN = decode_rational(a.at("LN"));
            d.ample_flag = a.value("ample", false);
            d.nef_flag = a.value("nef", false);
            d.k_ample = a.value("k_ample", false);
            spec.abstract = d;
        }
        if (!spec.pair && !spec.abstract) throw ParseError("instance needs 'polytope', 'rays' or 'abstract'");
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed instance: ") + e.what());
    }
}

json encode_pair(const PolarizedToricPair& x) {
    json rays = json::array(), boundary = json::array();
    for (std::size_t i = 0; i < x.ray_count(); ++i) {
        rays.push_back(encode(x.ray(i)));
        if (x.boundary()[i] != 0) boundary.push_back({{"ray", encode(x.ray(i))}, {"coefficient", encode(x.boundary()[i])}});
    }
    return {{"version", kSchemaVersion}, {"rays", rays}, {"polarization", encode(x.L().coeffs)}, {"boundary", boundary}};
}

json encode_abstract(const invariants::AbstractSlopeData& a) {
    json out = {{"n", a.n}, {"Ln", encode(a.Ln)}, {"LK", encode(a.LK)}, {"ample", a.ample_flag}, {"nef", a.nef_flag}, {"k_ample", a.k_ample}};
    if (a.LN) out["LN"] = encode(*a.LN);
    return out;
}

json encode_instance(const InstanceSpec& spec) {
    json out = spec.pair ? encode_pair(*spec.pair) : json{{"version", kSchemaVersion}};
    if (spec.abstract) out["abstract"] = encode_abstract(*spec.abstract);
    return out;
}

PLFunction parse_function(const json& j, int dim) {
    try {
        if (j.contains("pieces")) {
            std::vector<AffinePiece> pieces;
            for (const auto& p : j.at("pieces")) {
                AffinePiece piece{decode_vec(field(p, "slope")), decode_rational(field(p, "offset")), std::nullopt};
                if (static_cast<int>(piece.slope.size()) != dim) throw ParseError("piece slope of wrong dimension");
                if (p.contains("cell")) piece.cell = LatticePolytope::hull(decode_points(p.at("cell")));
                pieces.push_back(std::move(piece));
            }
            if (pieces.empty()) throw ParseError("empty piece list");
            return PLFunction::upper_envelope(dim, std::move(pieces));
        }
        if (j.contains("points")) {
            auto pts = decode_points(j.at("points"));
            auto vals = decode_vec(field(j, "values"));
            if (vals.size() != pts.size()) throw ParseError("one value per support point required");
            if (static_cast<int>(pts.front().size()) != dim) throw ParseError("support points of wrong dimension");
            return PLFunction::lower_convex_envelope(pts, vals);
        }
        if (j.contains("constant")) return PLFunction::constant(dim, decode_rational(j.at("constant")));
        throw ParseError("function needs 'pieces', 'points' or 'constant'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed function: ") + e.what());
    }
}

json encode_function(const PLFunction& f) {
    json pieces = json::array();
    for (const auto& p : f.pieces()) pieces.push_back({{"slope", encode(p.slope)}, {"offset", encode(p.offset)}});
    return {{"pieces", pieces}};
}

testconfig::ToricTestConfig parse_tc(const json& j, const PolarizedToricPair& base) {
    try {
        check_version(j);
        auto f = parse_function(field(j, "f"), base.n());
        const Rational ceiling = j.contains("ceiling") ? decode_rational(j.at("ceiling")) : f.max_on(base.polytope()) + 1;
        return testconfig::ToricTestConfig::build(base, f, ceiling);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed test configuration: ") + e.what());
    }
}

json encode_tc(const testconfig::ToricTestConfig& tc) {
    return {{"version", kSchemaVersion}, {"f", encode_function(tc.f())}, {"ceiling", encode(tc.ceiling())}};
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace kstab::io
