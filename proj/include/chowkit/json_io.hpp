#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chowkit/configurations.hpp"
#include "chowkit/grassmann.hpp"
#include "chowkit/hypersimplex.hpp"
#include "chowkit/polynomial.hpp"
#include "chowkit/schubert.hpp"
#include "chowkit/secondary.hpp"
#include "chowkit/trees.hpp"
#include "chowkit/veronese.hpp"

namespace chowkit::io {

using json = nlohmann::json;

// Schema violations are I/O-level failures, distinct from the typed domain
// errors: the CLI maps them to exit code 1.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rational_from_json(const json& j) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    throw ParseError("expected a rational as \"num/den\" string or integer");
}

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline json integer_to_json(const Integer& v) {
    // counts and volumes stay small; emit plain numbers
    return static_cast<long long>(v);
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a non-empty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw ParseError("rows must be arrays");
        std::vector<Rational> row;
        for (const auto& x : r) row.push_back(rational_from_json(x));
        rows.push_back(std::move(row));
    }
    try {
        return Matrix::from_rows(rows);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

inline int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

// ---- grassmann -----------------------------------------------------------

inline grassmann::Subspace subspace_from_json(const json& j) {
    const int k = int_field(j, "k"), n = int_field(j, "n");
    if (!j.contains("rows")) throw ParseError("missing \"rows\"");
    try {
        return grassmann::Subspace(k, n, matrix_from_json(j["rows"]));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline json subspace_to_json(const grassmann::Subspace& s) {
    return json{{"k", s.k}, {"n", s.n}, {"rows", matrix_to_json(s.matrix)}};
}

inline json plucker_to_json(const grassmann::PluckerVector& p) {
    json coords = json::object();
    for (const auto& [subset, value] : p.coords) coords[subset_key(subset)] = rational_to_json(value);
    return json{{"k", p.k}, {"n", p.n}, {"coords", coords}};
}

inline grassmann::PluckerVector plucker_from_json(const json& j) {
    grassmann::PluckerVector p;
    p.k = int_field(j, "k");
    p.n = int_field(j, "n");
    if (!j.contains("coords") || !j["coords"].is_object()) throw ParseError("missing \"coords\"");
    for (const auto& [key, value] : j["coords"].items()) {
        Subset s = parse_subset_key(key);
        if (static_cast<int>(s.size()) != p.k) throw ParseError("coordinate key is not a k-subset");
        p.coords[s] = rational_from_json(value);
    }
    bool nonzero = false;
    for (const auto& subset : k_subsets(p.n, p.k)) {
        if (!p.coords.count(subset)) p.coords[subset] = 0;
        if (p.coords[subset] != 0) nonzero = true;
    }
    if (!nonzero) throw ParseError("all Plucker coordinates vanish");
    if (!grassmann::satisfies_plucker_relations_k2(p))
        throw ParseError("coordinates violate the Plucker relations");
    return p;
}

// ---- hypersimplex --------------------------------------------------------

inline hypersimplex::MatroidPolytope polytope_from_json(const json& j) {
    hypersimplex::MatroidPolytope p;
    p.k = int_field(j, "k");
    p.n = int_field(j, "n");
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("missing \"vertices\"");
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw ParseError("vertices must be subset strings");
        Subset s = parse_subset_key(v.get<std::string>());
        if (static_cast<int>(s.size()) != p.k || (s.size() && (s.front() < 1 || s.back() > p.n)))
            throw ParseError("vertex is not a k-subset of 1..n");
        p.vertices.insert(std::move(s));
    }
    return p;
}

inline json polytope_to_json(const hypersimplex::MatroidPolytope& p) {
    json verts = json::array();
    for (const auto& s : p.vertices) verts.push_back(subset_key(s));
    return json{{"k", p.k}, {"n", p.n}, {"vertices", verts}};
}

inline hypersimplex::MatroidDecomposition decomposition_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("decomposition must be a non-empty array of polytopes");
    hypersimplex::MatroidDecomposition d;
    for (const auto& pj : j) {
        auto p = polytope_from_json(pj);
        if (d.pieces.empty()) {
            d.k = p.k;
            d.n = p.n;
        } else if (p.k != d.k || p.n != d.n) {
            throw ParseError("pieces disagree on (k,n)");
        }
        d.pieces.push_back(std::move(p));
    }
    return d;
}

inline json decomposition_to_json(const hypersimplex::MatroidDecomposition& d) {
    json out = json::array();
    auto pieces = d.pieces;
    std::sort(pieces.begin(), pieces.end());
    for (const auto& p : pieces) out.push_back(polytope_to_json(p));
    return out;
}

// ---- trees ----------------------------------------------------------------

inline std::string tree_vertex_name(const trees::LabeledTree& t, int v) {
    return t.is_leaf(v) ? "L" + std::to_string(v) : "v" + std::to_string(v - t.n);
}

inline json tree_to_json(const trees::LabeledTree& t) {
    json internal = json::array();
    for (int v = 1; v <= t.internals; ++v) internal.push_back("v" + std::to_string(v));
    auto edges = t.edges;
    std::sort(edges.begin(), edges.end());
    json ej = json::array();
    for (auto [a, b] : edges)
        ej.push_back(json::array({tree_vertex_name(t, a), tree_vertex_name(t, b)}));
    return json{{"n", t.n}, {"internal", internal}, {"edges", ej}};
}

inline trees::LabeledTree tree_from_json(const json& j) {
    trees::LabeledTree t;
    t.n = int_field(j, "n");
    if (!j.contains("internal") || !j["internal"].is_array()) throw ParseError("missing \"internal\"");
    t.internals = static_cast<int>(j["internal"].size());
    auto decode = [&](const std::string& name) {
        if (name.size() < 2) throw ParseError("bad vertex name '" + name + "'");
        int num = 0;
        try {
            num = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw ParseError("bad vertex name '" + name + "'");
        }
        if (name[0] == 'L') {
            if (num < 1 || num > t.n) throw ParseError("leaf out of range: " + name);
            return num;
        }
        if (name[0] == 'v') {
            if (num < 1 || num > t.internals) throw ParseError("internal vertex out of range: " + name);
            return t.n + num;
        }
        throw ParseError("bad vertex name '" + name + "'");
    };
    if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing \"edges\"");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError("edges must be pairs of vertex names");
        int a = decode(e[0].get<std::string>());
        int b = decode(e[1].get<std::string>());
        if (a > b) std::swap(a, b);
        t.edges.push_back({a, b});
    }
    if (!trees::is_valid_tree(t)) throw ParseError("not a valid labeled tree");
    return t;
}

// ---- secondary -------------------------------------------------------------

inline secondary::PointConfig point_config_from_json(const json& j) {
    if (!j.contains("points") || !j["points"].is_array()) throw ParseError("missing \"points\"");
    IntRows pts;
    for (const auto& p : j["points"]) {
        if (!p.is_array()) throw ParseError("points must be integer vectors");
        IntVector v;
        for (const auto& x : p) {
            if (!x.is_number_integer()) throw ParseError("point entries must be integers");
            v.push_back(Integer(x.get<long long>()));
        }
        pts.push_back(std::move(v));
    }
    try {
        return secondary::PointConfig(std::move(pts));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline json point_config_to_json(const secondary::PointConfig& a) {
    json pts = json::array();
    for (const auto& p : a.points) {
        json v = json::array();
        for (const auto& x : p) v.push_back(integer_to_json(x));
        pts.push_back(std::move(v));
    }
    return json{{"points", pts}};
}

inline secondary::Triangulation triangulation_from_json(const json& j) {
    if (!j.contains("simplices") || !j["simplices"].is_array()) throw ParseError("missing \"simplices\"");
    secondary::Triangulation t;
    for (const auto& s : j["simplices"]) {
        if (!s.is_array()) throw ParseError("simplices must be index arrays");
        std::vector<std::size_t> simplex;
        for (const auto& x : s) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw ParseError("simplex entries are 0-based point indices");
            simplex.push_back(x.get<std::size_t>());
        }
        std::sort(simplex.begin(), simplex.end());
        t.simplices.push_back(std::move(simplex));
    }
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

inline json triangulation_to_json(const secondary::Triangulation& t) {
    json out = json::array();
    for (const auto& s : t.simplices) {
        json sj = json::array();
        for (auto idx : s) sj.push_back(static_cast<long long>(idx));
        out.push_back(std::move(sj));
    }
    return json{{"simplices", out}};
}

inline json char_function_to_json(const secondary::CharFunction& phi) {
    json vals = json::array();
    for (const auto& v : phi.values) vals.push_back(integer_to_json(v));
    return json{{"values", vals}};
}

// ---- configurations --------------------------------------------------------

inline configurations::Configuration configuration_from_json(const json& j) {
    const int k = int_field(j, "k"), n = int_field(j, "n");
    if (!j.contains("columns") || !j["columns"].is_array()) throw ParseError("missing \"columns\"");
    if (static_cast<int>(j["columns"].size()) != n) throw ParseError("need one column per point");
    Matrix m(k, n);
    int col = 0;
    for (const auto& c : j["columns"]) {
        if (!c.is_array() || static_cast<int>(c.size()) != k)
            throw ParseError("columns must be k-vectors");
        for (int i = 0; i < k; ++i) m(i, col) = rational_from_json(c[i]);
        ++col;
    }
    try {
        return configurations::Configuration(k, n, std::move(m));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline json configuration_to_json(const configurations::Configuration& c) {
    json cols = json::array();
    for (int j = 0; j < c.n; ++j) {
        json v = json::array();
        for (int i = 0; i < c.k; ++i) v.push_back(rational_to_json(c.matrix(i, j)));
        cols.push_back(std::move(v));
    }
    return json{{"k", c.k}, {"n", c.n}, {"columns", cols}};
}

// ---- veronese ---------------------------------------------------------------

inline veronese::HyperplaneArrangement arrangement_from_json(const json& j) {
    const int k = int_field(j, "k"), n = int_field(j, "n");
    if (!j.contains("forms") || !j["forms"].is_array() || static_cast<int>(j["forms"].size()) != n)
        throw ParseError("need one coefficient row per form");
    Matrix m(n, k);
    int row = 0;
    for (const auto& f : j["forms"]) {
        if (!f.is_array() || static_cast<int>(f.size()) != k)
            throw ParseError("forms must be k-vectors of coefficients");
        for (int i = 0; i < k; ++i) m(row, i) = rational_from_json(f[i]);
        ++row;
    }
    try {
        return veronese::HyperplaneArrangement(k, n, std::move(m));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline json arrangement_to_json(const veronese::HyperplaneArrangement& arr) {
    json forms = json::array();
    for (int i = 0; i < arr.n; ++i) {
        json f = json::array();
        for (int j = 0; j < arr.k; ++j) f.push_back(rational_to_json(arr.coeffs(i, j)));
        forms.push_back(std::move(f));
    }
    return json{{"k", arr.k}, {"n", arr.n}, {"forms", forms}};
}

inline json quotient_subspace_to_json(const veronese::QuotientSubspace& s) {
    return json{{"k", s.k}, {"n", s.n}, {"rows", matrix_to_json(s.matrix)}};
}

// ---- polynomials -------------------------------------------------------------

inline std::string exponent_key(const std::vector<int>& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e[i]);
    }
    return out;
}

inline json multipoly_to_json(const MultiPoly& p) {
    json terms = json::object();
    for (const auto& [e, c] : p.terms()) terms[exponent_key(e)] = rational_to_json(c);
    return json{{"num_vars", p.num_vars()}, {"terms", terms}};
}

inline MultiPoly multipoly_from_json(const json& j) {
    const int nv = int_field(j, "num_vars");
    MultiPoly p(nv);
    if (!j.contains("terms") || !j["terms"].is_object()) throw ParseError("missing \"terms\"");
    for (const auto& [key, value] : j["terms"].items()) {
        std::vector<int> e;
        if (!key.empty()) {
            std::size_t start = 0;
            while (start <= key.size()) {
                auto comma = key.find(',', start);
                try {
                    e.push_back(std::stoi(key.substr(start, comma - start)));
                } catch (const std::exception&) {
                    throw ParseError("bad exponent key '" + key + "'");
                }
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        if (static_cast<int>(e.size()) != nv) throw ParseError("exponent key length mismatch");
        for (int x : e)
            if (x < 0) throw ParseError("negative exponent");
        p.add_term(e, rational_from_json(value));
    }
    return p;
}

// ---- schubert ------------------------------------------------------------------

inline std::string diagram_key(const schubert::YoungDiagram& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    return out;
}

inline schubert::YoungDiagram diagram_from_key(const std::string& key) {
    schubert::YoungDiagram d;
    if (key.empty()) return d;
    std::size_t start = 0;
    while (start <= key.size()) {
        auto comma = key.find(',', start);
        try {
            d.push_back(std::stoi(key.substr(start, comma - start)));
        } catch (const std::exception&) {
            throw ParseError("bad diagram key '" + key + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    try {
        return schubert::normalize_diagram(std::move(d));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline json schubert_class_to_json(const schubert::SchubertClass& c) {
    json coeffs = json::object();
    // largest diagrams first, matching the usual way these classes are read
    for (auto it = c.coeffs.rbegin(); it != c.coeffs.rend(); ++it)
        coeffs[diagram_key(it->first)] = it->second.str();
    json out{{"p", c.p}, {"q", c.q}, {"coeffs", coeffs}};
    if (c.dropped_terms > 0) out["dropped_terms"] = c.dropped_terms;
    return out;
}

} // namespace chowkit::io
