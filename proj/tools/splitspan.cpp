#include <splitspan/gale.hpp>
#include <splitspan/hypersimplex.hpp>
#include <splitspan/io.hpp>
#include <splitspan/secondary.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <limits>

using namespace splitspan;
using io::Json;

namespace {

struct Options {
    std::optional<std::size_t> max_points, max_dim, jobs;
    bool report = false;
    std::vector<std::string> inputs;
};

SizeGuards resolve_guards(const Options& o) {
    SizeGuards g;
    if (const char* env = std::getenv("SPLITSPAN_GUARDS")) {
        std::string s = env;
        if (s == "off" || s == "none") {
            g.max_points = g.max_dim = std::numeric_limits<std::size_t>::max();
        } else {
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto eq = item.find('=');
                if (eq == std::string::npos) throw ParseError("SPLITSPAN_GUARDS: expected key=value, got '" + item + "'");
                std::string key = item.substr(0, eq);
                std::size_t value;
                try {
                    value = std::stoul(item.substr(eq + 1));
                } catch (const std::exception&) {
                    throw ParseError("SPLITSPAN_GUARDS: bad number in '" + item + "'");
                }
                if (key == "max-points") g.max_points = value;
                else if (key == "max-dim") g.max_dim = value;
                else if (key == "jobs") g.jobs = value;
                else throw ParseError("SPLITSPAN_GUARDS: unknown guard '" + key + "'");
            }
        }
    }
    if (o.max_points) g.max_points = *o.max_points;
    if (o.max_dim) g.max_dim = *o.max_dim;
    if (o.jobs) g.jobs = std::max<std::size_t>(1, *o.jobs);
    return g;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Json verdict_json(const Verdict& v) {
    Json j{{"ok", v.ok}};
    if (!v.ok) j["reason"] = v.reason;
    return j;
}

Json two_split_json(const TwoSplit& t) {
    return Json{{"normal", io::to_json(t.normal)},
                {"offset", io::to_json(t.offset)},
                {"side_plus", io::index_set_json(t.side_plus)},
                {"side_minus", io::index_set_json(t.side_minus)}};
}

Json family_json(const SetFamily& f) {
    Json a = Json::array();
    for (auto& S : f) a.push_back(io::index_set_json(S));
    return a;
}

Json cell_families_json(const Hypersimplex& H, const Subdivision& S) {
    Json a = Json::array();
    for (auto& C : S.cells) a.push_back(family_json(cell_family(H, C)));
    return a;
}

Json shape_json(const TightSpanShape& T) {
    Json e = Json::array();
    for (auto [a, b] : T.edges) e.push_back(Json::array({a + 1, b + 1}));
    return Json{{"kind", to_string(T.kind)},
                {"f_vector", T.f_vector},
                {"num_vertices", T.num_vertices},
                {"maximal_faces", io::faces_json(T.maximal_faces)},
                {"edges", e}};
}

// Coarsest and regular checks on one subdivision; the coarseness search can hit a guard.
Json certificate(const PointConfiguration& A, const Subdivision& S) {
    Json j;
    Verdict v = validate_subdivision(A, S);
    j["valid"] = verdict_json(v);
    if (!v) return j;
    auto w = is_regular(A, S);
    j["regular"] = w.has_value();
    if (w) j["weight"] = io::to_json(*w);
    j["coarsest"] = is_coarsest(A, S);
    j["g_property"] = has_G_property(A, S);
    auto K = detect_k_split(A, S);
    j["k_split"] = K ? Json(K->k) : Json(nullptr);
    if (K) j["core_face"] = io::index_set_json(K->core_face);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact subdivisions, tight spans, splits and secondary polytopes of point configurations"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--max-points", opt.max_points, "Refuse enumerations on more points (default 10)");
    app.add_option("--max-dim", opt.max_dim, "Refuse enumerations in higher dimension (default 4)");
    app.add_option("--jobs", opt.jobs, "Worker threads for enumerations");
    app.add_flag("--report", opt.report, "Print a run report with timings on stderr");

    std::function<Json()> action;
    std::string config_path, second_path, weights_path, face_arg;
    std::size_t K = 0;
    auto config = [&] { return io::config_from_json(io::read_json(config_path), config_path); };
    auto weights = [&](const std::string& path, std::size_t n) { return io::weights_from_json(io::read_json(path), n, path); };

    auto* sub = app.add_subcommand("subdivide", "Regular subdivision induced by a weight");
    sub->add_option("config", config_path)->required();
    sub->add_option("--weights", weights_path)->required();
    sub->callback([&] {
        action = [&] {
            auto A = config();
            return Json{{"maximal_faces", io::to_json(regular_subdivision(A, weights(weights_path, A.size())))}};
        };
    });

    sub = app.add_subcommand("tightspan", "Bounded faces of the envelope");
    sub->add_option("config", config_path)->required();
    sub->add_option("--weights", weights_path)->required();
    sub->callback([&] {
        action = [&] {
            auto A = config();
            auto T = tight_span(A, weights(weights_path, A.size()));
            Json verts = Json::array(), faces = Json::array();
            for (auto& v : T.vertices) verts.push_back(io::to_json(v));
            for (std::size_t i = 0; i < T.faces.size(); ++i)
                faces.push_back(Json{{"dim", T.dims[i]}, {"vertices", io::index_set_json(T.faces[i])}});
            return Json{{"vertices", verts},
                        {"vertex_cells", io::faces_json(T.vertex_cells)},
                        {"faces", faces},
                        {"f_vector", T.f_vector()}};
        };
    });

    sub = app.add_subcommand("splits", "One-point splits and hyperplane splits");
    sub->add_option("config", config_path)->required();
    sub->callback([&] {
        action = [&] {
            auto A = config();
            Json ones = Json::array(), twos = Json::array();
            for (auto& s : one_splits(A)) ones.push_back(Json{{"point", s.point_index + 1}});
            for (auto& t : two_splits(A)) twos.push_back(two_split_json(t));
            return Json{{"one_splits", ones}, {"two_splits", twos}};
        };
    });

    sub = app.add_subcommand("decompose", "Split decomposition of a weight");
    sub->add_option("config", config_path)->required();
    sub->add_option("weights", weights_path)->required();
    sub->callback([&] {
        action = [&] {
            auto A = config();
            auto D = split_decomposition(A, weights(weights_path, A.size()));
            Json ones = Json::array(), twos = Json::array();
            for (auto& [p, l] : D.lambda_one) ones.push_back(Json{{"point", p + 1}, {"lambda", io::to_json(l)}});
            for (auto& [t, l] : D.lambda_two) {
                Json j = two_split_json(t);
                j["lambda"] = io::to_json(l);
                twos.push_back(j);
            }
            return Json{{"one_splits", ones},
                        {"two_splits", twos},
                        {"residual", io::to_json(D.residual)},
                        {"coherent", D.coherent},
                        {"residual_split_prime", is_split_prime(A, D.residual)}};
        };
    });

    sub = app.add_subcommand("ksplits", "All k-splits up to a bound");
    sub->add_option("config", config_path)->required();
    sub->add_option("--max-k", K, "Largest k (default d+1)");
    sub->callback([&] {
        action = [&] {
            auto A = config();
            std::size_t top = K ? K : A.dim() + 1;
            Json out = Json::array();
            for (std::size_t k = 1; k <= top; ++k)
                for (auto& S : enumerate_ksplits(A, k))
                    out.push_back(Json{{"k", S.k},
                                       {"maximal_faces", io::to_json(S.subdivision)},
                                       {"core_face", io::index_set_json(S.core_face)},
                                       {"weight", io::to_json(ksplit_weight(A, S))}});
            return Json{{"ksplits", out}};
        };
    });

    sub = app.add_subcommand("classify", "Coarseness, k-split type and tight-span shape of a subdivision");
    sub->add_option("config", config_path)->required();
    sub->add_option("subdivision", second_path)->required();
    sub->callback([&] {
        action = [&] {
            auto A = config();
            auto S = io::subdivision_from_json(io::read_json(second_path), A.size(), second_path);
            Verdict v = validate_subdivision(A, S);
            if (!v) throw DomainError("not a subdivision: " + v.reason);
            Json j = certificate(A, S);
            auto T = classify_tight_span(A, S);
            j["tight_span"] = shape_json(T);
            std::size_t k = S.size();
            j["shape_filter"] = verdict_json(necessary_shape_filter(T, k));
            return j;
        };
    });

    sub = app.add_subcommand("certify", "Check validity, regularity and coarseness of a subdivision");
    sub->add_option("config", config_path)->required();
    sub->add_option("subdivision", second_path)->required();
    sub->add_option("--weights", weights_path, "Also check that these weights induce it");
    sub->callback([&] {
        action = [&] {
            auto A = config();
            auto S = io::subdivision_from_json(io::read_json(second_path), A.size(), second_path);
            Json j = certificate(A, S);
            if (!weights_path.empty()) j["induced_by_weights"] = induces_subdivision(A, weights(weights_path, A.size()), S);
            return j;
        };
    });

    sub = app.add_subcommand("secondary", "Secondary polytope: GKZ vertices and facets");
    sub->add_option("config", config_path)->required();
    std::function<SizeGuards()> guards;
    sub->callback([&] {
        action = [&] {
            auto A = config();
            auto P = secondary_polytope(A, guards());
            Json verts = Json::array(), facets = Json::array();
            VPolyhedron V;
            V.ambient_dim = A.size();
            for (auto& x : P.vertices) {
                verts.push_back(Json{{"gkz", io::to_json(x.coordinates)}, {"triangulation", io::to_json(x.triangulation)}});
                V.vertices.push_back(x.coordinates);
            }
            for (auto& f : P.facets)
                facets.push_back(Json{{"normal", io::to_json(f.normal)},
                                      {"offset", io::to_json(f.offset)},
                                      {"maximal_faces", io::to_json(f.subdivision)},
                                      {"vertices", io::index_set_json(f.tight_vertices)}});
            auto fv = polytope_face_lattice(V).f_vector();
            return Json{{"dim", P.dim}, {"f_vector", fv}, {"vertices", verts}, {"facets", facets}};
        };
    });

    sub = app.add_subcommand("splitpoly", "Outer approximation of the secondary polytope by l-split facets, l <= k");
    sub->add_option("config", config_path)->required();
    sub->add_option("--k", K, "Level")->required();
    bool compare = false;
    sub->add_flag("--compare", compare, "Also decide whether it equals the secondary polytope");
    sub->callback([&] {
        action = [&] {
            auto A = config();
            check_guards(A, guards());
            auto SP = split_polyhedron(A, K);
            Json ineqs = Json::array();
            for (auto& i : SP.inequalities)
                ineqs.push_back(Json{{"level", i.level},
                                     {"normal", io::to_json(i.normal)},
                                     {"offset", io::to_json(i.offset)},
                                     {"maximal_faces", io::to_json(i.subdivision)}});
            Json j{{"level", SP.level}, {"inequalities", ineqs}};
            if (compare) j["totally_splittable"] = is_totally_k_splittable(A, K, guards());
            return j;
        };
    });

    sub = app.add_subcommand("gale", "Gale dual, chamber point and face membership");
    sub->add_option("config", config_path)->required();
    sub->add_option("--weights", weights_path);
    sub->add_option("--face", face_arg, "Comma-separated one-based indices; needs --weights");
    sub->callback([&] {
        action = [&] {
            auto A = config();
            auto G = gale_dual(A);
            Json vecs = Json::array();
            for (auto& v : G.vectors) vecs.push_back(io::to_json(v));
            Json j{{"dim", G.dim}, {"vectors", vecs}};
            if (!face_arg.empty() && weights_path.empty()) throw ParseError("--face needs --weights");
            if (!weights_path.empty()) {
                auto w = weights(weights_path, A.size());
                j["chamber_point"] = io::to_json(weight_to_chamber_point(A, G, w));
                if (!face_arg.empty()) {
                    Json arr = io::parse_json("[" + face_arg + "]", "--face");
                    IndexSet F = io::index_set_from_json(arr, A.size(), "--face");
                    j["face"] = Json{{"points", io::index_set_json(F)}, {"in_subdivision", chamber_face_test(A, G, w, F)}};
                }
            }
            return j;
        };
    });

    sub = app.add_subcommand("lift-polytope", "Polytope with an isomorphic secondary polytope");
    sub->add_option("config", config_path)->required();
    sub->callback([&] {
        action = [&] {
            auto r = polytope_with_same_secondary(config());
            return Json{{"polytope", io::config_json(r.polytope)}, {"duplicated", io::index_set_json(r.duplicated)}};
        };
    });

    sub = app.add_subcommand("realize-tightspan",
                             "With weights: move a tight span onto a polytope. Without: realize the polytope as a tight span");
    sub->add_option("polytope", config_path)->required();
    sub->add_option("weights", weights_path);
    sub->callback([&] {
        action = [&] {
            auto lifted_json = [](const LiftedPolytope& L) {
                return Json{{"polytope", io::config_json(L.polytope)},
                            {"weights", io::to_json(L.weight)},
                            {"kept", io::index_set_json(L.kept)},
                            {"shift", io::to_json(L.shift)}};
            };
            Json j = io::read_json(config_path);
            if (!weights_path.empty()) {
                auto A = io::config_from_json(j.contains("vertices") ? Json{{"points", j["vertices"]}} : j, config_path);
                return lifted_json(pc_to_polytope_tightspan(A, weights(weights_path, A.size())));
            }
            auto R = polytope_as_tightspan(io::polytope_from_json(j, config_path));
            return Json{{"configuration", io::config_json(R.config)},
                        {"weights", io::to_json(R.weight)},
                        {"translation", io::to_json(R.translation)},
                        {"lifted", lifted_json(pc_to_polytope_tightspan(R.config, R.weight))}};
        };
    });

    sub = app.add_subcommand("hypersimplex", "Splits of the hypersimplex Delta(k,n)");
    std::size_t hk = 0, hn = 0;
    bool two = false, three = false, count = false, certify = false;
    sub->add_option("--k", hk)->required();
    sub->add_option("--n", hn)->required();
    sub->add_flag("--two-splits", two);
    sub->add_flag("--three-splits", three);
    sub->add_flag("--count", count);
    sub->add_flag("--certify", certify, "Run matroid, regularity and coarseness checks on each split");
    sub->callback([&] {
        action = [&] {
            auto H = hypersimplex(hk, hn);
            if (!two && !three) count = true;
            Json j{{"k", hk}, {"n", hn}, {"vertices", H.vertex_sets.size()}};
            std::optional<PointConfiguration> A;
            if (certify) A = hypersimplex_config(hk, hn);
            auto cert = [&](const Subdivision& S) {
                Json c{{"matroid", is_matroid_subdivision(H, S)}};
                Verdict v = validate_subdivision(*A, S);
                c["valid"] = v.ok;
                c["regular"] = is_regular(*A, S).has_value();
                c["coarsest"] = is_coarsest(*A, S);
                return c;
            };
            if (two) {
                Json out = Json::array();
                for (auto& s : hypersimplex_two_splits(hk, hn)) {
                    Json e{{"A", io::index_set_json(s.A)}, {"B", io::index_set_json(s.B)}, {"mu", s.mu}};
                    if (certify) e["certificate"] = cert(ab_split_cells(s, H));
                    out.push_back(e);
                }
                j["two_splits"] = out;
            }
            auto all = enumerate_three_splits(hk, hn);
            if (three) {
                Json out = Json::array();
                for (auto& t : all) {
                    Json parts = Json::array();
                    for (auto& p : t.parts) parts.push_back(io::index_set_json(p));
                    auto S = three_split_cells(t, hk, hn);
                    Json e{{"parts", parts}, {"mu", t.mus}, {"orientation", t.orientation}, {"cells", cell_families_json(H, S)}};
                    if (certify) e["certificate"] = cert(S);
                    out.push_back(e);
                }
                j["three_splits"] = out;
            }
            if (count) {
                j["three_split_count"] = count_three_splits(hk, hn).get_str();
                j["three_split_count_unclipped"] = count_three_splits(hk, hn, true).get_str();
                j["three_splits_enumerated"] = all.size();
            }
            return j;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    int rc = 0;
    SizeGuards resolved;
    try {
        resolved = resolve_guards(opt);
        guards = [&] { return resolved; };
        Json out = action();
        std::cout << out.dump(2) << "\n";
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    } catch (const GuardError& e) {
        std::cerr << "refused by guard " << e.guard << ": " << e.what() << "\n";
        rc = 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        rc = 1;
    }
    if (opt.report) {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        Json inputs = Json::array();
        for (auto* p : {&config_path, &second_path, &weights_path})
            if (!p->empty()) {
                std::string h;
                try {
                    char buf[17];
                    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(io::read_text(*p))));
                    h = buf;
                } catch (const std::exception&) {
                    h = "unreadable";
                }
                inputs.push_back(Json{{"path", *p}, {"fnv1a64", h}});
            }
        Json rep{{"command", app.get_subcommands().front()->get_name()},
                 {"inputs", inputs},
                 {"guards", Json{{"max_points", resolved.max_points}, {"max_dim", resolved.max_dim}, {"jobs", resolved.jobs}}},
                 {"exit_code", rc},
                 {"elapsed_ms", ms}};
        std::cerr << rep.dump() << "\n";
    }
    return rc;
}
