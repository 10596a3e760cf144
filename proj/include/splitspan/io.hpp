#pragma once

#include "config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace splitspan::io {

using Json = nlohmann::ordered_json;

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
    // integers past 64 bits arrive as doubles, already rounded
    if (j.is_number_float() && std::abs(j.get<double>()) >= 9.2e18)
        throw ParseError("integer " + j.dump() + " is too large for a JSON number; quote it as a string");
    if (j.is_number()) throw ParseError("non-integer number " + j.dump() + "; write rationals as strings like \"1/3\"");
    throw ParseError("expected a rational, got " + j.dump());
}

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Vec& v) {
    Json a = Json::array();
    for (auto& x : v) a.push_back(to_string(x));
    return a;
}

// user-facing indices are one-based
inline Json index_set_json(const IndexSet& s) {
    Json a = Json::array();
    for (auto i : s) a.push_back(i + 1);
    return a;
}

inline Json faces_json(const std::vector<IndexSet>& faces) {
    Json a = Json::array();
    for (auto& f : faces) a.push_back(index_set_json(f));
    return a;
}

inline Json to_json(const Subdivision& S) { return faces_json(S.cells); }

inline Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    Vec v;
    for (auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

inline std::string location(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& name) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(name + ": malformed JSON at " + location(text, e.byte) + ": " + e.what());
    }
}

inline Json read_json(const std::string& path) { return parse_json(read_text(path), path); }

inline const Json& field(const Json& j, const char* key, const std::string& what) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(what + ": missing \"" + key + "\"");
    return j.at(key);
}

inline PointConfiguration config_from_json(const Json& j, const std::string& what = "configuration") {
    const Json& pts = field(j, "points", what);
    if (!pts.is_array() || pts.empty()) throw ParseError(what + ": \"points\" must be a nonempty array");
    std::vector<Vec> points;
    for (auto& p : pts) points.push_back(vec_from_json(p));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (auto& l : j.at("labels")) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
        if (labels.size() != points.size()) throw ParseError(what + ": labels and points differ in number");
    }
    for (auto& p : points)
        if (p.size() != points[0].size()) throw ParseError(what + ": points of mixed dimension");
    return PointConfiguration(points, labels);
}

inline Weight weights_from_json(const Json& j, std::size_t n, const std::string& what = "weights") {
    Weight w = vec_from_json(j.is_array() ? j : field(j, "weights", what));
    if (w.size() != n) throw ParseError(what + ": expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
    return w;
}

inline IndexSet index_set_from_json(const Json& j, std::size_t n, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected an index array");
    IndexSet s;
    for (auto& x : j) {
        if (!x.is_number_integer()) throw ParseError(what + ": indices must be integers");
        long v = x.get<long>();
        if (v < 1 || static_cast<std::size_t>(v) > n) throw ParseError(what + ": index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        s.push_back(v - 1);
    }
    normalize(s);
    return s;
}

inline Subdivision subdivision_from_json(const Json& j, std::size_t n, const std::string& what = "subdivision") {
    const Json& faces = field(j, "maximal_faces", what);
    if (!faces.is_array() || faces.empty()) throw ParseError(what + ": \"maximal_faces\" must be a nonempty array");
    std::vector<IndexSet> cells;
    for (auto& f : faces) cells.push_back(index_set_from_json(f, n, what));
    return Subdivision(cells);
}

// {"vertices": [...]} or a configuration file
inline VPolyhedron polytope_from_json(const Json& j, const std::string& what = "polytope") {
    VPolyhedron P;
    const char* key = j.is_object() && j.contains("vertices") ? "vertices" : "points";
    for (auto& p : field(j, key, what)) P.vertices.push_back(vec_from_json(p));
    if (j.contains("rays") && !j.at("rays").empty()) throw ParseError(what + ": rays are not allowed for a polytope");
    if (P.vertices.empty()) throw ParseError(what + ": no vertices");
    P.ambient_dim = P.vertices[0].size();
    for (auto& v : P.vertices)
        if (v.size() != P.ambient_dim) throw ParseError(what + ": vertices of mixed dimension");
    return P;
}

inline Json config_json(const PointConfiguration& A) {
    Json pts = Json::array();
    for (auto& p : A.points) pts.push_back(to_json(p));
    Json j{{"points", pts}};
    if (!A.labels.empty()) j["labels"] = A.labels;
    return j;
}

}  // namespace splitspan::io
