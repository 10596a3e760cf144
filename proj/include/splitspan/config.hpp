#pragma once

#include "polyhedron.hpp"

#include <functional>
#include <map>
#include <string>

namespace splitspan {

struct PointConfiguration {
    std::vector<Vec> points;
    std::vector<std::string> labels;

    PointConfiguration() = default;
    explicit PointConfiguration(std::vector<Vec> pts, std::vector<std::string> lab = {})
        : points(std::move(pts)), labels(std::move(lab)) {
        if (points.empty()) throw DomainError("empty point configuration");
        for (auto& p : points) {
            if (p.size() != points[0].size()) throw DomainError("points of mixed dimension");
            for (auto& x : p) x.canonicalize();
        }
        if (affine_dim(points) != static_cast<long>(points[0].size()))
            throw DomainError("configuration does not span its ambient space");
    }

    std::size_t size() const { return points.size(); }
    std::size_t dim() const { return points.empty() ? 0 : points[0].size(); }
    const Vec& operator[](std::size_t i) const { return points[i]; }

    std::vector<Vec> subset(const IndexSet& s) const {
        std::vector<Vec> r;
        for (auto i : s) r.push_back(points[i]);
        return r;
    }
};

using Weight = Vec;

struct Subdivision {
    std::vector<IndexSet> cells;  // maximal faces, sorted

    Subdivision() = default;
    explicit Subdivision(std::vector<IndexSet> c) : cells(std::move(c)) { canonicalize(); }

    void canonicalize() {
        for (auto& c : cells) normalize(c);
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    }
    std::size_t size() const { return cells.size(); }
    bool operator==(const Subdivision& o) const { return cells == o.cells; }
    bool operator!=(const Subdivision& o) const { return cells != o.cells; }
    bool operator<(const Subdivision& o) const { return cells < o.cells; }

    IndexSet used_points() const {
        IndexSet u;
        for (auto& c : cells) u = set_union(u, c);
        return u;
    }
};

inline Subdivision trivial_subdivision(const PointConfiguration& A) { return Subdivision({iota_set(A.size())}); }

struct Verdict {
    bool ok = true;
    std::string reason;
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    explicit operator bool() const { return ok; }
    static Verdict fail(std::string why, std::optional<std::pair<std::size_t, std::size_t>> p = std::nullopt) {
        return {false, std::move(why), p};
    }
};

// Point sets of the facets of conv(C), as global indices; includes non-vertex points.
inline std::vector<IndexSet> facets_of(const PointConfiguration& A, const IndexSet& C) {
    VPolyhedron v;
    v.ambient_dim = A.dim();
    v.vertices = A.subset(C);
    VtoHResult r = dd_convert_VtoH_incidence(v);
    std::vector<IndexSet> out;
    for (auto& f : r.facet_vertices) {
        IndexSet g;
        for (auto i : f) g.push_back(C[i]);
        out.push_back(g);
    }
    return out;
}

// Nonempty faces of the subconfiguration C, C itself included.
inline std::vector<IndexSet> faces_of(const PointConfiguration& A, const IndexSet& C) {
    std::vector<IndexSet> f = C.size() > 1 && affine_dim(A.subset(C)) > 0 ? intersection_closure(facets_of(A, C))
                                                                           : std::vector<IndexSet>{};
    f.push_back(C);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

inline std::vector<IndexSet> configuration_faces(const PointConfiguration& A) { return faces_of(A, iota_set(A.size())); }

inline long dim_of(const PointConfiguration& A, const IndexSet& s) { return affine_dim(A.subset(s)); }

inline bool is_interior_face(const std::vector<IndexSet>& boundary_facets, const IndexSet& G) {
    return std::none_of(boundary_facets.begin(), boundary_facets.end(), [&](const IndexSet& f) { return is_subset(G, f); });
}

// Affine function c0 + c.x agreeing with w on C, as (c0, c...).
inline std::optional<Vec> affine_interpolant(const PointConfiguration& A, const IndexSet& C, const Weight& w) {
    RatMatrix m(C.size(), A.dim() + 1);
    Vec b(C.size());
    for (std::size_t i = 0; i < C.size(); ++i) {
        Vec h = homogenize(A[C[i]]);
        for (std::size_t j = 0; j <= A.dim(); ++j) m(i, j) = h[j];
        b[i] = w[C[i]];
    }
    return solve(m, b);
}

inline Rational eval_affine(const Vec& c, const Vec& p) { return dot(c, homogenize(p)); }

// Pulling triangulation of conv(C): apex is the smallest index of each face.
inline std::vector<IndexSet> pulling_triangulation(const PointConfiguration& A, const IndexSet& C) {
    std::vector<IndexSet> faces = faces_of(A, C);
    std::map<IndexSet, long> dims;
    for (auto& f : faces) dims[f] = dim_of(A, f);
    std::map<IndexSet, std::vector<IndexSet>> memo;
    std::function<const std::vector<IndexSet>&(const IndexSet&)> tri = [&](const IndexSet& F) -> const std::vector<IndexSet>& {
        auto it = memo.find(F);
        if (it != memo.end()) return it->second;
        long dF = dims[F];
        std::vector<IndexSet> out;
        std::size_t apex = F.front();
        if (dF == 0) {
            out.push_back({apex});
        } else {
            for (auto& [G, dG] : dims) {
                if (dG != dF - 1 || !is_subset(G, F) || contains(G, apex)) continue;
                for (auto& s : tri(G)) {
                    IndexSet t = s;
                    t.push_back(apex);
                    normalize(t);
                    out.push_back(t);
                }
            }
        }
        return memo[F] = std::move(out);
    };
    return tri(C);
}

inline Rational simplex_volume(const PointConfiguration& A, const IndexSet& s) {
    std::size_t d = A.dim();
    RatMatrix m(d, d);
    for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = A[s[i]][j] - A[s[0]][j];
    Rational det = determinant(m);
    Integer fact = 1;
    for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<unsigned long>(i);
    return abs(det) / Rational(fact);
}

// Euclidean volume of conv(C) for a full-dimensional C.
inline Rational volume(const PointConfiguration& A, const IndexSet& C) {
    if (dim_of(A, C) != static_cast<long>(A.dim())) return 0;
    Rational v = 0;
    for (auto& s : pulling_triangulation(A, C)) v += simplex_volume(A, s);
    return v;
}

// Always-tight points of a maximal separator of conv C1 and conv C2 (C1 on the nonnegative side).
inline std::pair<IndexSet, IndexSet> separation_tight_sets(const PointConfiguration& A, const IndexSet& C1, const IndexSet& C2) {
    std::size_t d = A.dim(), n1 = C1.size(), n2 = C2.size();
    std::size_t nv = d + 1 + n1 + n2;
    LinearProgram lp(nv);
    for (std::size_t j = d + 1; j < nv; ++j) {
        lp.nonneg[j] = true;
        Vec e(nv);
        e[j] = 1;
        lp.add(e, Sense::le, 1);
        lp.objective[j] = 1;
    }
    auto add_side = [&](const IndexSet& C, std::size_t off, int sign) {
        for (std::size_t i = 0; i < C.size(); ++i) {
            Vec row(nv);
            Vec h = homogenize(A[C[i]]);
            for (std::size_t j = 0; j <= d; ++j) row[j] = sign > 0 ? h[j] : Rational(-h[j]);
            row[off + i] = -1;
            lp.add(row, Sense::ge, 0);
        }
    };
    add_side(C1, d + 1, 1);
    add_side(C2, d + 1 + n1, -1);
    LPResult r = solve(lp);
    Vec g(r.x.begin(), r.x.begin() + d + 1);
    IndexSet T1, T2;
    for (auto i : C1)
        if (sgn(dot(g, homogenize(A[i]))) == 0) T1.push_back(i);
    for (auto i : C2)
        if (sgn(dot(g, homogenize(A[i]))) == 0) T2.push_back(i);
    return {T1, T2};
}

struct ValidateOptions {
    bool check_volume = true;
};

inline Verdict validate_subdivision(const PointConfiguration& A, const Subdivision& S, ValidateOptions opt = {}) {
    if (S.cells.empty()) return Verdict::fail("no maximal faces");
    for (std::size_t i = 0; i < S.cells.size(); ++i) {
        const IndexSet& c = S.cells[i];
        if (c.empty()) return Verdict::fail("empty cell");
        if (c.back() >= A.size()) return Verdict::fail("point index out of range");
        if (dim_of(A, c) != static_cast<long>(A.dim()))
            return Verdict::fail("cell " + std::to_string(i) + " is not full-dimensional", std::make_pair(i, i));
    }
    for (std::size_t i = 0; i < S.cells.size(); ++i)
        for (std::size_t j = i + 1; j < S.cells.size(); ++j) {
            auto [T1, T2] = separation_tight_sets(A, S.cells[i], S.cells[j]);
            if (T1 == S.cells[i] && T2 == S.cells[j])
                return Verdict::fail("cells overlap in their interiors", std::make_pair(i, j));
            if (T1 != T2) return Verdict::fail("cells do not meet in a common face", std::make_pair(i, j));
        }
    if (opt.check_volume) {
        Rational total = 0;
        for (auto& c : S.cells) total += volume(A, c);
        if (total != volume(A, iota_set(A.size()))) return Verdict::fail("cells do not cover conv A");
    }
    return {};
}

inline VPolyhedron lift(const PointConfiguration& A, const Weight& w) {
    if (w.size() != A.size()) throw DomainError("weight length differs from configuration size");
    VPolyhedron v;
    v.ambient_dim = A.dim() + 1;
    for (std::size_t i = 0; i < A.size(); ++i) {
        Vec p;
        p.push_back(w[i]);
        p.insert(p.end(), A[i].begin(), A[i].end());
        v.vertices.push_back(p);
    }
    Vec e(A.dim() + 1);
    e[0] = 1;
    v.rays.push_back(e);
    return v;
}

inline Subdivision regular_subdivision(const PointConfiguration& A, const Weight& w) {
    VtoHResult r = dd_convert_VtoH_incidence(lift(A, w));
    std::vector<IndexSet> cells;
    for (std::size_t i = 0; i < r.h.inequalities.size(); ++i)
        if (sgn(r.h.inequalities[i].a[0]) > 0) cells.push_back(r.facet_vertices[i]);
    if (cells.empty()) cells.push_back(iota_set(A.size()));  // zero-dimensional configurations
    return Subdivision(cells);
}

// True iff w induces S; cheaper than recomputing the lower hull.
inline bool induces_subdivision(const PointConfiguration& A, const Weight& w, const Subdivision& S) {
    IndexSet used = S.used_points();
    for (auto& C : S.cells) {
        if (dim_of(A, C) != static_cast<long>(A.dim())) return false;
        auto c = affine_interpolant(A, C, w);
        if (!c) return false;
        for (std::size_t i = 0; i < A.size(); ++i) {
            Rational diff = w[i] - eval_affine(*c, A[i]);
            if (contains(C, i) ? sgn(diff) != 0 : sgn(diff) <= 0) return false;
        }
    }
    // cells induced by w must cover conv A, checked by volume
    Rational total = 0;
    for (auto& C : S.cells) total += volume(A, C);
    return total == volume(A, iota_set(A.size()));
}

inline HPolyhedron envelope(const PointConfiguration& A, const Weight& w) {
    HPolyhedron h;
    h.ambient_dim = A.dim() + 1;
    for (std::size_t i = 0; i < A.size(); ++i) h.inequalities.push_back({homogenize(A[i]), -w[i]});
    return h;
}

// Abstract tight span: vertices are cells, faces are stars of interior faces.
struct DualComplex {
    std::size_t num_vertices = 0;
    std::vector<IndexSet> faces;           // cell sets, one per interior face
    std::vector<IndexSet> interior_faces;  // the primal faces
    std::vector<long> dims;                // d - dim of primal face

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (auto dm : dims) {
            if (f.size() <= static_cast<std::size_t>(dm)) f.resize(dm + 1, 0);
            ++f[dm];
        }
        return f;
    }
    std::vector<IndexSet> maximal_faces() const {
        std::vector<IndexSet> m;
        for (auto& f : faces) {
            bool maximal = true;
            for (auto& g : faces)
                if (g != f && is_subset(f, g)) maximal = false;
            if (maximal) m.push_back(f);
        }
        return m;
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> e;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (dims[i] == 1 && faces[i].size() == 2) e.emplace_back(faces[i][0], faces[i][1]);
        return e;
    }
};

// Every face of S (faces of the maximal cells).
inline std::vector<IndexSet> subdivision_faces(const PointConfiguration& A, const Subdivision& S) {
    std::set<IndexSet> all;
    for (auto& C : S.cells)
        for (auto& f : faces_of(A, C)) all.insert(f);
    return {all.begin(), all.end()};
}

inline std::vector<IndexSet> interior_faces(const PointConfiguration& A, const Subdivision& S) {
    std::vector<IndexSet> boundary = facets_of(A, iota_set(A.size()));
    std::vector<IndexSet> out;
    for (auto& f : subdivision_faces(A, S))
        if (is_interior_face(boundary, f)) out.push_back(f);
    return out;
}

inline DualComplex abstract_tight_span(const PointConfiguration& A, const Subdivision& S) {
    DualComplex D;
    D.num_vertices = S.size();
    std::vector<std::tuple<long, IndexSet, IndexSet>> items;
    for (auto& G : interior_faces(A, S)) {
        IndexSet star;
        for (std::size_t c = 0; c < S.size(); ++c)
            if (is_subset(G, S.cells[c])) star.push_back(c);
        items.emplace_back(static_cast<long>(A.dim()) - dim_of(A, G), star, G);
    }
    std::sort(items.begin(), items.end());
    for (auto& [dm, star, G] : items) {
        D.dims.push_back(dm);
        D.faces.push_back(star);
        D.interior_faces.push_back(G);
    }
    return D;
}

inline bool has_G_property(const PointConfiguration& A, const Subdivision& S) {
    auto inner = interior_faces(A, S);
    std::size_t minimal = 0;
    for (auto& f : inner) {
        bool is_min = true;
        for (auto& g : inner)
            if (g != f && is_subset(g, f)) is_min = false;
        minimal += is_min;
    }
    return minimal == 1;
}

struct TightSpan {
    std::vector<Vec> vertices;           // points of R^{d+1}
    std::vector<IndexSet> vertex_cells;  // points tight at each vertex: the cells of the subdivision
    std::vector<IndexSet> faces;         // bounded faces as vertex index sets
    std::vector<long> dims;
    DualComplex abstract_dual;

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (auto dm : dims) {
            if (f.size() <= static_cast<std::size_t>(dm)) f.resize(dm + 1, 0);
            ++f[dm];
        }
        return f;
    }
};

inline TightSpan tight_span(const PointConfiguration& A, const Weight& w) {
    HtoVResult hv = dd_convert_HtoV_incidence(envelope(A, w));
    TightSpan T;
    T.vertices = hv.v.vertices;
    T.vertex_cells = hv.vertex_tight;
    std::vector<std::pair<long, IndexSet>> faces;
    for (auto& I : intersection_closure(hv.vertex_tight)) {
        bool bounded = std::none_of(hv.ray_tight.begin(), hv.ray_tight.end(), [&](const IndexSet& r) { return is_subset(I, r); });
        if (!bounded) continue;
        IndexSet vs;
        for (std::size_t v = 0; v < T.vertices.size(); ++v)
            if (is_subset(I, hv.vertex_tight[v])) vs.push_back(v);
        std::vector<Vec> pts;
        for (auto v : vs) pts.push_back(T.vertices[v]);
        faces.emplace_back(affine_dim(pts), vs);
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto& [dm, vs] : faces) {
        T.dims.push_back(dm);
        T.faces.push_back(vs);
    }
    T.abstract_dual = abstract_tight_span(A, regular_subdivision(A, w));
    return T;
}

inline bool is_refinement(const PointConfiguration&, const Subdivision& S1, const Subdivision& S2) {
    for (auto& c : S1.cells)
        if (std::none_of(S2.cells.begin(), S2.cells.end(), [&](const IndexSet& d) { return is_subset(c, d); })) return false;
    return true;
}

inline std::optional<Subdivision> common_refinement(const PointConfiguration& A, const Subdivision& S1, const Subdivision& S2) {
    std::vector<IndexSet> cand;
    for (auto& a : S1.cells)
        for (auto& b : S2.cells) {
            IndexSet x = set_intersection(a, b);
            if (!x.empty() && dim_of(A, x) == static_cast<long>(A.dim())) cand.push_back(x);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<IndexSet> maximal;
    for (auto& c : cand)
        if (std::none_of(cand.begin(), cand.end(), [&](const IndexSet& o) { return o != c && is_subset(c, o); }))
            maximal.push_back(c);
    if (maximal.empty()) return std::nullopt;
    Subdivision S(maximal);
    if (!validate_subdivision(A, S)) return std::nullopt;
    return S;
}

inline bool coherence_check(const PointConfiguration& A, const Weight& w1, const Weight& w2) {
    auto S = common_refinement(A, regular_subdivision(A, w1), regular_subdivision(A, w2));
    return S && *S == regular_subdivision(A, w1 + w2);
}

// Every vertex of E(w1+w2) is a sum of points of E(w1) and E(w2).
inline bool minkowski_check(const PointConfiguration& A, const Weight& w1, const Weight& w2) {
    std::size_t D = A.dim() + 1;
    VPolyhedron sum = dd_convert_HtoV(envelope(A, w1 + w2));
    for (auto& v : sum.vertices) {
        std::vector<Constraint> weak;
        for (std::size_t i = 0; i < A.size(); ++i) {
            Vec h = homogenize(A[i]);
            weak.push_back({h, -w1[i]});
            weak.push_back({Rational(-1) * h, -w2[i] - dot(h, v)});
        }
        if (!strict_lp_feasible({}, weak, {}, D)) return false;
    }
    return true;
}

// Subdivisions with the same hulls, ignoring which labels are used.
inline bool geometric_equal(const PointConfiguration& A, const Subdivision& S1, const Subdivision& S2) {
    auto hulls = [&](const Subdivision& S) {
        std::set<std::set<Vec>> out;
        for (auto& C : S.cells) {
            std::set<Vec> verts;
            VPolyhedron v;
            v.ambient_dim = A.dim();
            v.vertices = A.subset(C);
            VtoHResult r = dd_convert_VtoH_incidence(v);
            std::vector<IndexSet> inc(C.size());
            for (std::size_t f = 0; f < r.facet_vertices.size(); ++f)
                for (auto i : r.facet_vertices[f]) inc[i].push_back(f);
            // a point is a vertex iff no other distinct point lies on all its facets
            for (std::size_t i = 0; i < C.size(); ++i) {
                bool vertex = true;
                for (std::size_t j = 0; j < C.size() && vertex; ++j)
                    if (A[C[j]] != A[C[i]] && is_subset(inc[i], inc[j])) vertex = false;
                if (vertex) verts.insert(A[C[i]]);
            }
            out.insert(verts);
        }
        return out;
    };
    return hulls(S1) == hulls(S2);
}

}  // namespace splitspan
