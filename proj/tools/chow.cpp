#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "chowkit/chowkit.hpp"
#include "chowkit/cli_registry.hpp"
#include "chowkit/selftest.hpp"

namespace {

using chowkit::io::json;
using chowkit::io::ParseError;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad integer list '" + s + "'");
        }
    }
    return out;
}

std::vector<chowkit::Rational> parse_rat_list(const std::string& s) {
    std::vector<chowkit::Rational> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(chowkit::parse_rational(tok));
    return out;
}

chowkit::schubert::YoungDiagram parse_diagram(const std::string& s) {
    return chowkit::schubert::normalize_diagram(parse_int_list(s));
}

struct Driver {
    std::string output_path;
    std::string format = "json";
    int jobs = 1;
    std::function<json()> action;
    bool selftest = false;

    int run() {
        if (format != "json") throw ParseError("only --format json is supported");
        if (selftest) {
            auto results = chowkit::selftest::run_all();
            std::cout << chowkit::selftest::format_table(results);
            for (const auto& r : results)
                if (!r.passed) return 2;
            return 0;
        }
        if (!action) return 0;
        const json out = action();
        if (output_path.empty()) {
            std::cout << out.dump() << "\n";
        } else {
            std::ofstream f(output_path);
            if (!f) throw ParseError("cannot open '" + output_path + "' for writing");
            f << out.dump() << "\n";
        }
        return 0;
    }
};

json relabeling_json(int n, int dropped) {
    json out = json::object();
    for (int x = 1; x <= n; ++x) {
        if (x == dropped) continue;
        out[std::to_string(x)] = x < dropped ? x : x - 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    using namespace chowkit;

    CLI::App app{"exact combinatorial invariants of torus quotients of Grassmannians"};
    app.require_subcommand(1);
    Driver drv;
    app.add_option("--output", drv.output_path, "write the JSON result to a file");
    app.add_option("--format", drv.format, "output format (json)");
    app.add_option("--jobs", drv.jobs, "worker threads for library internals (currently 1)");

    // ---- exact ------------------------------------------------------------
    auto* exact = app.add_subcommand("exact", "rational linear algebra and polynomials");
    {
        static std::string file;
        auto* c = exact->add_subcommand("rank", "rank of a rational matrix");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] { return json{{"rank", chowkit::rank(io::matrix_from_json(load_json(file)))}}; };
        });
    }
    {
        static std::string file;
        auto* c = exact->add_subcommand("kernel", "basis of the right kernel");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return json{{"kernel", io::matrix_to_json(kernel_basis(io::matrix_from_json(load_json(file))))}};
            };
        });
    }
    {
        static std::string file, rows, cols;
        auto* c = exact->add_subcommand("minor", "determinant of a square submatrix");
        c->add_option("file", file)->required();
        c->add_option("--rows", rows, "1-based row indices, comma separated")->required();
        c->add_option("--cols", cols, "1-based column indices, comma separated")->required();
        c->callback([&] {
            drv.action = [] {
                Matrix m = io::matrix_from_json(load_json(file));
                std::vector<std::size_t> r, cidx;
                for (int x : parse_int_list(rows)) {
                    if (x < 1) throw IndexOutOfRange("row index");
                    r.push_back(x - 1);
                }
                for (int x : parse_int_list(cols)) {
                    if (x < 1) throw IndexOutOfRange("column index");
                    cidx.push_back(x - 1);
                }
                return json{{"minor", to_string(minor_det(m, r, cidx))}};
            };
        });
    }
    {
        static std::string file;
        auto* c = exact->add_subcommand("polydet", "symbolic determinant of a polynomial matrix");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                const json j = load_json(file);
                if (!j.is_array()) throw ParseError("expected an array of rows of polynomials");
                std::vector<std::vector<MultiPoly>> m;
                for (const auto& row : j) {
                    std::vector<MultiPoly> r;
                    for (const auto& cell : row) r.push_back(io::multipoly_from_json(cell));
                    m.push_back(std::move(r));
                }
                return io::multipoly_to_json(poly_det(m));
            };
        });
    }

    // ---- grassmann ----------------------------------------------------------
    auto* gr = app.add_subcommand("grassmann", "points of G(k,n) and their invariants");
    {
        static std::string file;
        auto* c = gr->add_subcommand("plucker", "Plucker coordinates of a subspace");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return io::plucker_to_json(grassmann::plucker(io::subspace_from_json(load_json(file))));
            };
        });
    }
    {
        static std::string file;
        auto* c = gr->add_subcommand("generic", "is every Plucker coordinate nonzero?");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return json{{"generic", grassmann::is_generic(io::subspace_from_json(load_json(file)))}};
            };
        });
    }
    {
        static std::string file;
        auto* c = gr->add_subcommand("matroid", "bases of the matroid of a subspace");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                json bases = json::array();
                for (const auto& b : grassmann::matroid_bases(io::subspace_from_json(load_json(file))))
                    bases.push_back(subset_key(b));
                return json{{"bases", bases}};
            };
        });
    }
    {
        static std::string file;
        static int index = 0;
        auto* c = gr->add_subcommand("intersect", "intersect with the coordinate hyperplane x_i = 0");
        c->add_option("i", index)->required();
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return io::subspace_to_json(
                    grassmann::intersect_coord_hyperplane(io::subspace_from_json(load_json(file)), index));
            };
        });
    }
    {
        static std::string file;
        static int index = 0;
        auto* c = gr->add_subcommand("project", "project away the i-th coordinate");
        c->add_option("i", index)->required();
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return io::subspace_to_json(
                    grassmann::project_away(io::subspace_from_json(load_json(file)), index));
            };
        });
    }
    {
        static std::string file;
        auto* c = gr->add_subcommand("config", "columns as a configuration of points in P^{k-1}");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return io::configuration_to_json(
                    grassmann::gm_configuration(io::subspace_from_json(load_json(file))));
            };
        });
    }

    // ---- hypersimplex ----------------------------------------------------------
    auto* hs = app.add_subcommand("hypersimplex", "Delta(k,n), matroid polytopes, decompositions");
    {
        static int k = 0, n = 0;
        auto* c = hs->add_subcommand("vertices", "vertices of Delta(k,n)");
        c->add_option("k", k)->required();
        c->add_option("n", n)->required();
        c->callback([&] {
            drv.action = [] {
                json verts = json::array();
                for (const auto& v : hypersimplex::hypersimplex_vertices(k, n))
                    verts.push_back(subset_key(v));
                return json{{"k", k}, {"n", n}, {"vertices", verts}};
            };
        });
    }
    {
        static int k = 0, n = 0, i = 0;
        static std::string sgn;
        auto* c = hs->add_subcommand("facet", "facet Gamma_i^+/- with its hypersimplex relabeling");
        c->add_option("k", k)->required();
        c->add_option("n", n)->required();
        c->add_option("i", i)->required();
        c->add_option("sign", sgn, "+ or -")->required();
        c->callback([&] {
            drv.action = [] {
                if (sgn != "+" && sgn != "-") throw BadParams("sign must be + or -");
                auto p = hypersimplex::facet(k, n, i, sgn[0]);
                return json{{"polytope", io::polytope_to_json(p)}, {"relabeling", relabeling_json(n, i)}};
            };
        });
    }
    {
        static std::string file;
        auto* c = hs->add_subcommand("is-matroid", "basis-exchange test for a vertex set");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return json{{"matroid_polytope",
                             hypersimplex::is_matroid_polytope(io::polytope_from_json(load_json(file)))}};
            };
        });
    }
    {
        static std::string file;
        auto* c = hs->add_subcommand("of-subspace", "matroid polytope of a subspace");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return io::polytope_to_json(
                    hypersimplex::matroid_polytope_of(io::subspace_from_json(load_json(file))));
            };
        });
    }
    {
        static std::string file;
        auto* c = hs->add_subcommand("volume", "lattice-normalized volume of a matroid polytope");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return json{{"volume", io::integer_to_json(hypersimplex::normalized_volume(
                                           io::polytope_from_json(load_json(file))))}};
            };
        });
    }
    {
        static std::string file;
        auto* c = hs->add_subcommand("validate-decomposition", "is this a matroid decomposition?");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return json{{"valid", hypersimplex::is_matroid_decomposition(
                                          io::decomposition_from_json(load_json(file)))}};
            };
        });
    }
    {
        static std::string file, sgn;
        static int i = 0;
        auto* c = hs->add_subcommand("restrict", "restrict a decomposition to a facet");
        c->add_option("i", i)->required();
        c->add_option("sign", sgn, "+ or -")->required();
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                if (sgn != "+" && sgn != "-") throw BadParams("sign must be + or -");
                return io::decomposition_to_json(hypersimplex::restrict_to_facet(
                    io::decomposition_from_json(load_json(file)), i, sgn[0]));
            };
        });
    }

    // ---- trees -------------------------------------------------------------------
    auto* tr = app.add_subcommand("trees", "labeled trees and Delta(2,n) decompositions");
    {
        static std::string vertex, file;
        auto* c = tr->add_subcommand("relation", "leaf partition at an internal vertex");
        c->add_option("vertex", vertex, "internal vertex name, e.g. v1")->required();
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                auto t = io::tree_from_json(load_json(file));
                if (vertex.size() < 2 || vertex[0] != 'v') throw NotInternal("expected an internal vertex name");
                int v = 0;
                try {
                    v = t.n + std::stoi(vertex.substr(1));
                } catch (const std::exception&) {
                    throw ParseError("bad vertex name '" + vertex + "'");
                }
                json blocks = json::array();
                for (const auto& b : trees::vertex_relation(t, v)) blocks.push_back(b);
                return json{{"blocks", blocks}};
            };
        });
    }
    {
        static std::string file;
        auto* c = tr->add_subcommand("to-decomposition", "matroid decomposition encoded by a tree");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return io::decomposition_to_json(
                    trees::tree_to_decomposition(io::tree_from_json(load_json(file))));
            };
        });
    }
    {
        static std::string file;
        auto* c = tr->add_subcommand("from-decomposition", "tree encoded by a k=2 decomposition");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return io::tree_to_json(
                    trees::decomposition_to_tree(io::decomposition_from_json(load_json(file))));
            };
        });
    }
    {
        static int n = 0;
        auto* c = tr->add_subcommand("enumerate", "all trees with n labeled endpoints");
        c->add_option("n", n)->required();
        c->callback([&] {
            drv.action = [] {
                json out = json::array();
                for (const auto& t : trees::enumerate_trees(n)) out.push_back(io::tree_to_json(t));
                return out;
            };
        });
    }
    {
        static std::string file;
        auto* c = tr->add_subcommand("stratum", "stability and stratum dimension");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                auto t = io::tree_from_json(load_json(file));
                return json{{"stable", trees::is_stable_tree(t)},
                            {"dimension", trees::stratum_dimension(t)}};
            };
        });
    }
    {
        static std::string file;
        static int i = 0;
        auto* c = tr->add_subcommand("forget", "forget marked point i");
        c->add_option("i", i)->required();
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                auto t = io::tree_from_json(load_json(file));
                auto out = trees::forget_point(t, i);
                return json{{"tree", io::tree_to_json(out)}, {"relabeling", relabeling_json(t.n, i)}};
            };
        });
    }

    // ---- secondary -------------------------------------------------------------------
    auto* sec = app.add_subcommand("secondary", "triangulations and secondary polytopes");
    {
        static std::string cfg_file, tri_file;
        auto* c = sec->add_subcommand("charfn", "characteristic function of a triangulation");
        c->add_option("config", cfg_file)->required();
        c->add_option("triangulation", tri_file)->required();
        c->callback([&] {
            drv.action = [] {
                auto a = io::point_config_from_json(load_json(cfg_file));
                auto t = io::triangulation_from_json(load_json(tri_file));
                return io::char_function_to_json(secondary::char_function(t, a));
            };
        });
    }
    {
        static std::string file;
        static bool count = false;
        auto* c = sec->add_subcommand("triangulations", "enumerate all triangulations");
        c->add_option("file", file)->required();
        c->add_flag("--count", count, "report only the count");
        c->callback([&] {
            drv.action = [] {
                auto a = io::point_config_from_json(load_json(file));
                auto tris = secondary::enumerate_triangulations(a);
                if (count) return json{{"triangulations", tris.size()}};
                json out = json::array();
                for (const auto& t : tris) out.push_back(io::triangulation_to_json(t));
                return json{{"triangulations", out}};
            };
        });
    }
    {
        static std::string file;
        auto* c = sec->add_subcommand("vertices", "vertices of the secondary polytope");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                auto a = io::point_config_from_json(load_json(file));
                json out = json::array();
                for (const auto& phi : secondary::secondary_vertices(a))
                    out.push_back(io::char_function_to_json(phi)["values"]);
                return json{{"vertices", out}};
            };
        });
    }
    {
        static int k = 0;
        static std::string perm;
        static bool count = false;
        auto* c = sec->add_subcommand("prism", "staircase triangulations of Delta^1 x Delta^k");
        c->add_option("k", k)->required();
        c->add_option("--perm", perm, "permutation of 0..k acting on the second factor");
        c->add_flag("--count", count, "brute-force triangulation count");
        c->callback([&] {
            drv.action = [] {
                auto cfg = secondary::prism_config(k);
                if (count) {
                    auto tris = secondary::enumerate_triangulations(cfg);
                    return json{{"triangulations", tris.size()}};
                }
                auto t = perm.empty()
                             ? secondary::prism_standard_triangulation(k)
                             : secondary::prism_triangulation_of_permutation(k, parse_int_list(perm));
                json labels = json::array();
                for (int a = 0; a <= 1; ++a)
                    for (int b = 0; b <= k; ++b) labels.push_back(json::array({a, b}));
                return json{{"config", io::point_config_to_json(cfg)},
                            {"labels", labels},
                            {"triangulation", io::triangulation_to_json(t)}};
            };
        });
    }
    {
        static int k = 0;
        auto* c = sec->add_subcommand("permutohedron", "S_{k+1}-orbit of (1,...,k+1)");
        c->add_option("k", k)->required();
        c->callback([&] {
            drv.action = [] {
                json out = json::array();
                for (const auto& v : secondary::permutohedron_vertices(k)) {
                    json row = json::array();
                    for (const auto& x : v) row.push_back(io::integer_to_json(x));
                    out.push_back(std::move(row));
                }
                return json{{"vertices", out}};
            };
        });
    }

    // ---- config ---------------------------------------------------------------------
    auto* cf = app.add_subcommand("config", "projective configurations and association");
    {
        static std::string file;
        auto* c = cf->add_subcommand("general", "general position test");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return json{{"general_position", configurations::is_general_position(
                                                     io::configuration_from_json(load_json(file)))}};
            };
        });
    }
    {
        static std::string file;
        auto* c = cf->add_subcommand("cross-ratio", "cross-ratio of four points of P^1");
        c->add_option("file", file, "{\"points\": [[x,y], ...]} homogeneous pairs")->required();
        c->callback([&] {
            drv.action = [] {
                const json j = load_json(file);
                if (!j.contains("points") || !j["points"].is_array() || j["points"].size() != 4)
                    throw ParseError("need exactly four points");
                std::vector<configurations::ProjPoint1> pts;
                for (const auto& p : j["points"]) {
                    if (!p.is_array() || p.size() != 2) throw ParseError("points are [x, y] pairs");
                    pts.push_back({io::rational_from_json(p[0]), io::rational_from_json(p[1])});
                }
                return json{{"cross_ratio",
                             to_string(configurations::cross_ratio(pts[0], pts[1], pts[2], pts[3]))}};
            };
        });
    }
    {
        static std::string file;
        auto* c = cf->add_subcommand("associate", "the associated configuration in P^{n-k-1}");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return io::configuration_to_json(
                    configurations::associate(io::configuration_from_json(load_json(file))));
            };
        });
    }
    {
        static std::string file;
        auto* c = cf->add_subcommand("circuit", "circuit test for a point list");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                auto cfg = io::configuration_from_json(load_json(file));
                return json{{"circuit", configurations::is_circuit(cfg.matrix)}};
            };
        });
    }
    {
        static std::string file;
        auto* c = cf->add_subcommand("normal-form6", "normal form (a,b,c,d) of a generic sextuple");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                auto nf = configurations::six_point_normal_form(io::configuration_from_json(load_json(file)));
                return json{{"a", to_string(nf.a)},
                            {"b", to_string(nf.b)},
                            {"c", to_string(nf.c)},
                            {"d", to_string(nf.d)}};
            };
        });
    }
    {
        static std::string file;
        auto* c = cf->add_subcommand("conic-test", "do six points lie on a conic?");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                auto cfg = io::configuration_from_json(load_json(file));
                auto nf = configurations::six_point_normal_form(cfg);
                return json{{"lies_on_conic", configurations::lies_on_conic(cfg)},
                            {"psi", to_string(configurations::psi(nf.a, nf.b, nf.c, nf.d))},
                            {"tangent_system_rank",
                             veronese::tangent_system_rank(nf.a, nf.b, nf.c, nf.d)}};
            };
        });
    }

    // ---- veronese ----------------------------------------------------------------------
    auto* vr = app.add_subcommand("veronese", "logarithmic Gauss maps, sweeps, tetrahedral complexes");
    {
        static std::string file, at;
        auto* c = vr->add_subcommand("gauss", "logarithmic Gauss image at a point");
        c->add_option("file", file)->required();
        c->add_option("--at", at, "point of P^{k-1}, comma separated")->required();
        c->callback([&] {
            drv.action = [] {
                auto arr = io::arrangement_from_json(load_json(file));
                return io::quotient_subspace_to_json(veronese::log_gauss(arr, parse_rat_list(at)));
            };
        });
    }
    {
        static std::string file;
        auto* c = vr->add_subcommand("pluckerpolys", "symbolic Plucker coordinates of the Gauss image");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                auto arr = io::arrangement_from_json(load_json(file));
                json polys = json::object();
                for (const auto& [I, p] : veronese::plucker_polys(arr))
                    polys[subset_key(I)] = io::multipoly_to_json(p);
                return json{{"k", arr.k}, {"n", arr.n}, {"polys", polys}};
            };
        });
    }
    {
        static std::string file, indices;
        auto* c = vr->add_subcommand("marked", "marked point of the Veronese variety");
        c->add_option("file", file)->required();
        c->add_option("--indices", indices, "k-1 hyperplane indices, comma separated")->required();
        c->callback([&] {
            drv.action = [] {
                auto arr = io::arrangement_from_json(load_json(file));
                return io::quotient_subspace_to_json(
                    veronese::marked_point(arr, parse_int_list(indices)));
            };
        });
    }
    {
        static std::string file, at;
        auto* c = vr->add_subcommand("steiner", "Steiner matrix of linear forms");
        c->add_option("file", file)->required();
        c->add_option("--at", at, "evaluate at a point of P^{k-1}");
        c->callback([&] {
            drv.action = [] {
                auto arr = io::arrangement_from_json(load_json(file));
                if (!at.empty())
                    return json{{"matrix", io::matrix_to_json(
                                               veronese::steiner_matrix_at(arr, parse_rat_list(at)))}};
                json rows = json::array();
                for (const auto& row : veronese::steiner_matrix(arr)) {
                    json r = json::array();
                    for (const auto& cell : row) r.push_back(io::multipoly_to_json(cell));
                    rows.push_back(std::move(r));
                }
                return json{{"matrix", rows}};
            };
        });
    }
    {
        static std::string file, tpoint;
        auto* c = vr->add_subcommand("sweep-test", "sweep matrix and membership at a point of h");
        c->add_option("file", file)->required();
        c->add_option("--t", tpoint, "point of C^n, comma separated")->required();
        c->callback([&] {
            drv.action = [] {
                auto arr = io::arrangement_from_json(load_json(file));
                auto t = parse_rat_list(tpoint);
                return json{{"matrix", io::matrix_to_json(veronese::sweep_matrix(arr, t))},
                            {"on_sweep", veronese::on_sweep(arr, t)}};
            };
        });
    }
    {
        static std::string a, b, cc, d;
        auto* c = vr->add_subcommand("tangent-rank", "rank of the chord tangency system");
        c->add_option("a", a)->required();
        c->add_option("b", b)->required();
        c->add_option("c", cc)->required();
        c->add_option("d", d)->required();
        c->callback([&] {
            drv.action = [] {
                const Rational ra = parse_rational(a), rb = parse_rational(b), rc = parse_rational(cc),
                               rd = parse_rational(d);
                return json{{"rank", veronese::tangent_system_rank(ra, rb, rc, rd)},
                            {"psi", to_string(configurations::psi(ra, rb, rc, rd))}};
            };
        });
    }
    {
        static std::string file;
        auto* c = vr->add_subcommand("tetra", "tetrahedral complex parameter of a line");
        c->add_option("file", file)->required();
        c->callback([&] {
            drv.action = [] {
                return json{{"lambda", to_string(veronese::tetrahedral_ratio(
                                           io::subspace_from_json(load_json(file))))}};
            };
        });
    }

    // ---- schubert ------------------------------------------------------------------------
    auto* sb = app.add_subcommand("schubert", "partitions, Kostka/LR numbers, homology classes");
    {
        static std::string parts;
        auto* c = sb->add_subcommand("conjugate", "transposed Young diagram");
        c->add_option("parts", parts, "comma separated, empty for the empty diagram");
        c->callback([&] {
            drv.action = [] { return json{{"parts", schubert::conjugate(parse_diagram(parts))}}; };
        });
    }
    {
        static std::string parts;
        static int p = 0, q = 0;
        auto* c = sb->add_subcommand("heights", "lattice path heights in G(p,q)");
        c->add_option("p", p)->required();
        c->add_option("q", q)->required();
        c->add_option("--parts", parts);
        c->callback([&] {
            drv.action = [] { return json{{"heights", schubert::heights(parse_diagram(parts), p, q)}}; };
        });
    }
    {
        static std::string parts;
        static int m = 0;
        auto* c = sb->add_subcommand("dim", "dimension of the GL(m) representation");
        c->add_option("m", m)->required();
        c->add_option("--parts", parts);
        c->callback([&] {
            drv.action = [] { return json{{"dim", schubert::schur_dim(parse_diagram(parts), m).str()}}; };
        });
    }
    {
        static std::string weight, shape;
        auto* c = sb->add_subcommand("kostka", "Kostka number K_{lambda,alpha}");
        c->add_option("--weight", weight)->required();
        c->add_option("--shape", shape)->required();
        c->callback([&] {
            drv.action = [] {
                return json{{"kostka", schubert::kostka(parse_int_list(weight), parse_diagram(shape)).str()}};
            };
        });
    }
    {
        static std::string alpha, beta, gamma;
        auto* c = sb->add_subcommand("lr", "Littlewood-Richardson number c^gamma_{alpha,beta}");
        c->add_option("--alpha", alpha);
        c->add_option("--beta", beta);
        c->add_option("--gamma", gamma)->required();
        c->callback([&] {
            drv.action = [] {
                return json{{"coefficient", schubert::littlewood_richardson(
                                                parse_diagram(alpha), parse_diagram(beta),
                                                parse_diagram(gamma))
                                                .str()}};
            };
        });
    }
    {
        static std::string alpha, beta;
        static int p1 = 0, q1 = 0, p2 = 0, q2 = 0;
        auto* c = sb->add_subcommand("pushforward", "direct-sum pushforward of sigma_alpha (x) sigma_beta");
        c->add_option("--alpha", alpha);
        c->add_option("--p1", p1)->required();
        c->add_option("--q1", q1)->required();
        c->add_option("--beta", beta);
        c->add_option("--p2", p2)->required();
        c->add_option("--q2", q2)->required();
        c->callback([&] {
            drv.action = [] {
                return io::schubert_class_to_json(schubert::direct_sum_pushforward(
                    parse_diagram(alpha), p1, q1, parse_diagram(beta), p2, q2));
            };
        });
    }
    {
        static std::string indices;
        static int n = 0;
        auto* c = sb->add_subcommand("weight-of", "weight label of an index subset");
        c->add_option("n", n)->required();
        c->add_option("--indices", indices);
        c->callback([&] {
            drv.action = [] {
                return json{{"weight", schubert::weight_of_subset(parse_int_list(indices), n)}};
            };
        });
    }
    {
        static std::string weight;
        static int k = 0, n = 0;
        auto* c = sb->add_subcommand("component-class", "homology class of the component X(lambda)");
        c->add_option("k", k)->required();
        c->add_option("n", n)->required();
        c->add_option("--weight", weight)->required();
        c->callback([&] {
            drv.action = [] {
                return io::schubert_class_to_json(
                    schubert::component_class(parse_int_list(weight), k, n));
            };
        });
    }
    {
        static int k = 0, n = 0;
        auto* c = sb->add_subcommand("veronese-class", "class of a special Veronese variety");
        c->add_option("k", k)->required();
        c->add_option("n", n)->required();
        c->callback([&] {
            drv.action = [] { return io::schubert_class_to_json(schubert::veronese_class(k, n)); };
        });
    }
    {
        static int k = 0, n = 0;
        auto* c = sb->add_subcommand("contour-class", "the same class via the hyperplane-section formula");
        c->add_option("k", k)->required();
        c->add_option("n", n)->required();
        c->callback([&] {
            drv.action = [] { return io::schubert_class_to_json(schubert::klyachko_contour_class(k, n)); };
        });
    }
    {
        static int k = 0, n = 0;
        auto* c = sb->add_subcommand("lie-class", "fundamental class of a Lie complex in G(k,n)");
        c->add_option("k", k)->required();
        c->add_option("n", n)->required();
        c->callback([&] {
            drv.action = [] { return io::schubert_class_to_json(schubert::lie_complex_class(k, n)); };
        });
    }
    {
        static int kmax = 4, nmax = 9;
        auto* c = sb->add_subcommand("crosscheck", "verify the two class formulas agree on a grid");
        c->add_option("--kmax", kmax);
        c->add_option("--nmax", nmax);
        c->callback([&] {
            drv.action = [] {
                int cases = 0;
                bool equal = true;
                for (int k = 2; k <= kmax; ++k)
                    for (int n = k + 2; n <= nmax; ++n) {
                        ++cases;
                        if (!(schubert::veronese_class(k, n) == schubert::klyachko_contour_class(k, n)))
                            equal = false;
                    }
                return json{{"equal", equal}, {"cases", cases}};
            };
        });
    }

    // ---- selftest ----------------------------------------------------------------------------
    auto* st = app.add_subcommand("selftest", "run the acceptance-criteria suite");
    st->callback([&] { drv.selftest = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return drv.run();
    } catch (const chowkit::Error& e) {
        json err{{"error", e.name()}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
