#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coverhom/cell_complex.hpp"
#include "coverhom/cochain.hpp"
#include "coverhom/cover.hpp"
#include "coverhom/geometry.hpp"
#include "coverhom/hocolim.hpp"
#include "coverhom/quadform.hpp"

namespace coverhom {

using json = nlohmann::json;

/// Numbers may be given as JSON integers, as decimal numbers (converted from
/// their exact binary value), or as strings like "-3/4" or "0.25".
inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_number_float()) return Rational(j.get<double>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw input_error("expected a number or a rational string");
}

inline json rational_to_json(const Rational& r) {
    if (denominator(r) == 1 && abs(r) < Rational(1LL << 52)) {
        return json(static_cast<std::int64_t>(numerator(r)));
    }
    return json(to_string(r));
}

namespace detail {

inline std::vector<Simplex> parse_simplex_list(const json& j, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array of simplices");
    std::vector<Simplex> out;
    for (const auto& s : j) {
        if (!s.is_array()) throw input_error("a simplex must be an array of vertex ids");
        Simplex simplex;
        for (const auto& v : s) {
            if (!v.is_number_integer()) throw input_error("vertex ids must be integers");
            simplex.push_back(v.get<int>());
        }
        out.push_back(std::move(simplex));
    }
    return out;
}

} // namespace detail

/// {"vertices": n, "simplices": [[...], ...]} listing maximal simplices;
/// faces are closed automatically.
inline SimplicialComplex parse_simplicial_complex(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("simplices"))
        throw input_error("simplicial complex needs 'vertices' and 'simplices'");
    const int n = j.at("vertices").get<int>();
    return SimplicialComplex::from_maximal(n, detail::parse_simplex_list(j.at("simplices"), "simplices"));
}

inline json simplicial_complex_to_json(const SimplicialComplex& k) {
    json simplices = json::array();
    // maximal simplices: those that are a face of nothing else
    for (int p = k.dim(); p >= 0; --p)
        for (const auto& s : k.simplices(p)) {
            bool maximal = true;
            for (int q = p + 1; q <= k.dim() && maximal; ++q)
                for (const auto& t : k.simplices(q))
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        maximal = false;
                        break;
                    }
            if (maximal) simplices.push_back(s);
        }
    return json{{"vertices", k.vertex_count()}, {"simplices", simplices}};
}

/// {"complex": <complex>, "sub": [[...], ...]}; the sub entry lists maximal
/// simplices of the subcomplex.
inline SubcomplexPair parse_pair(const json& j) {
    if (!j.is_object() || !j.contains("complex") || !j.contains("sub"))
        throw input_error("pair needs 'complex' and 'sub'");
    SimplicialComplex ambient = parse_simplicial_complex(j.at("complex"));
    SimplicialComplex sub = SimplicialComplex::from_maximal(
        ambient.vertex_count(), detail::parse_simplex_list(j.at("sub"), "sub"));
    return SubcomplexPair(std::move(ambient), std::move(sub));
}

/// {"cells": [{"id": 3, "dim": 1, "faces": {"1": 1, "2": -1}}, ...]}
inline RegularCellComplex parse_cell_complex(const json& j) {
    if (!j.is_object() || !j.contains("cells"))
        throw input_error("cell complex needs a 'cells' array");
    std::vector<RegularCellComplex::Cell> cells;
    std::map<long, std::map<long, int>> incidence;
    for (const auto& c : j.at("cells")) {
        if (!c.contains("id") || !c.contains("dim"))
            throw input_error("every cell needs 'id' and 'dim'");
        const long id = c.at("id").get<long>();
        cells.push_back({id, c.at("dim").get<int>()});
        if (c.contains("faces")) {
            for (const auto& [face, coeff] : c.at("faces").items())
                incidence[id][std::stol(face)] = coeff.get<int>();
        }
    }
    return RegularCellComplex(std::move(cells), std::move(incidence));
}

namespace detail {

inline std::pair<SimplicialComplex, std::vector<SimplicialComplex>> parse_family(const json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("members"))
        throw input_error("expected 'ambient' and 'members'");
    SimplicialComplex ambient = parse_simplicial_complex(j.at("ambient"));
    std::vector<SimplicialComplex> members;
    for (const auto& m : j.at("members"))
        members.push_back(SimplicialComplex::from_maximal(
            ambient.vertex_count(), parse_simplex_list(m, "member")));
    return {std::move(ambient), std::move(members)};
}

} // namespace detail

/// {"ambient": <complex>, "members": [[maximal simplices], ...]}
inline Cover parse_cover(const json& j) {
    auto [ambient, members] = detail::parse_family(j);
    return Cover(std::move(ambient), std::move(members));
}

/// Same schema as a cover, but the members need not exhaust the ambient
/// complex.
inline Arrangement parse_arrangement(const json& j) {
    auto [ambient, members] = detail::parse_family(j);
    return Arrangement(std::move(ambient), std::move(members));
}

inline json arrangement_to_json(const Arrangement& arr) {
    json members = json::array();
    for (const auto& s : arr.sets()) members.push_back(simplicial_complex_to_json(s).at("simplices"));
    return json{{"ambient", simplicial_complex_to_json(arr.ambient())}, {"members", members}};
}

inline ScenePrimitive parse_primitive(const json& j) {
    if (!j.is_object() || !j.contains("type")) throw input_error("primitive needs a 'type'");
    const std::string type = j.at("type").get<std::string>();
    ScenePrimitive p;
    if (type == "ball") {
        p.kind = ScenePrimitive::Kind::ball;
        for (const auto& c : j.at("center")) p.center.push_back(rational_from_json(c));
        p.radius = rational_from_json(j.at("radius"));
    } else if (type == "box") {
        p.kind = ScenePrimitive::Kind::box;
        for (const auto& c : j.at("min")) p.box_min.push_back(rational_from_json(c));
        for (const auto& c : j.at("max")) p.box_max.push_back(rational_from_json(c));
    } else if (type == "quadric") {
        p.kind = ScenePrimitive::Kind::quadric;
        for (const auto& row : j.at("matrix")) {
            std::vector<Rational> r;
            for (const auto& v : row) r.push_back(rational_from_json(v));
            p.matrix.push_back(std::move(r));
        }
        const std::string s = j.value("sign", "<=0");
        if (s == "<=0")
            p.quadric_nonpositive = true;
        else if (s == ">=0")
            p.quadric_nonpositive = false;
        else
            throw input_error("quadric sign must be '<=0' or '>=0'");
    } else if (type == "intersection") {
        p.kind = ScenePrimitive::Kind::intersection;
        for (const auto& part : j.at("parts")) p.parts.push_back(parse_primitive(part));
        if (p.parts.empty()) throw input_error("intersection primitive needs parts");
    } else {
        throw input_error("unsupported primitive type '" + type + "'");
    }
    return p;
}

/// {"dim": k, "bbox": [min..., max...], "primitives": [...]}
inline Scene parse_scene(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("bbox") || !j.contains("primitives"))
        throw input_error("scene needs 'dim', 'bbox' and 'primitives'");
    Scene scene;
    scene.dim = j.at("dim").get<int>();
    const auto& bbox = j.at("bbox");
    if (!bbox.is_array() || static_cast<int>(bbox.size()) != 2 * scene.dim)
        throw input_error("bbox must list the k minima followed by the k maxima");
    for (int i = 0; i < scene.dim; ++i) scene.bbox_min.push_back(rational_from_json(bbox[static_cast<std::size_t>(i)]));
    for (int i = 0; i < scene.dim; ++i)
        scene.bbox_max.push_back(rational_from_json(bbox[static_cast<std::size_t>(scene.dim + i)]));
    for (const auto& p : j.at("primitives")) scene.primitives.push_back(parse_primitive(p));
    return scene;
}

inline QuadraticForm parse_form(const json& j) {
    if (!j.is_object() || !j.contains("matrix")) throw input_error("form needs a 'matrix'");
    std::vector<std::vector<Rational>> m;
    for (const auto& row : j.at("matrix")) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from_json(v));
        m.push_back(std::move(r));
    }
    return QuadraticForm(std::move(m));
}

/// {"k": 2, "forms": [{"matrix": [[...]]}, ...], "signs": ["<=0", ...]}
/// The 'signs' entry is optional and defaults to all "<=0".
struct QuadInput {
    int k = 0;
    std::vector<QuadraticForm> forms;
    std::vector<SignCondition> conditions;
};

inline QuadInput parse_quad_input(const json& j) {
    if (!j.is_object() || !j.contains("forms")) throw input_error("quad input needs 'forms'");
    QuadInput in;
    for (const auto& f : j.at("forms")) in.forms.push_back(parse_form(f));
    if (in.forms.empty()) throw input_error("quad input needs at least one form");
    in.k = in.forms[0].sphere_dim();
    if (j.contains("k") && j.at("k").get<int>() != in.k)
        throw input_error("'k' does not match the form matrices (need (k+1)x(k+1))");
    std::vector<std::string> signs(in.forms.size(), "<=0");
    if (j.contains("signs")) {
        const auto& s = j.at("signs");
        if (s.size() != in.forms.size()) throw input_error("'signs' must match the number of forms");
        for (std::size_t i = 0; i < s.size(); ++i) signs[i] = s[static_cast<int>(i)].get<std::string>();
    }
    for (std::size_t i = 0; i < in.forms.size(); ++i) {
        if (signs[i] != "<=0" && signs[i] != ">=0")
            throw input_error("signs must be '<=0' or '>=0'");
        in.conditions.push_back({in.forms[i], signs[i] == "<=0"});
    }
    return in;
}

} // namespace coverhom
