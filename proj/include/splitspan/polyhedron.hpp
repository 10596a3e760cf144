#pragma once

#include "lp.hpp"
#include "matrix.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <set>

namespace splitspan {

// a.x >= b rows and a.x = b rows
struct HPolyhedron {
    std::vector<Constraint> inequalities;
    std::vector<Constraint> equations;
    std::size_t ambient_dim = 0;
};

struct VPolyhedron {
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
    std::size_t ambient_dim = 0;
    bool empty = false;
    std::vector<Vec> lineality;  // nonempty only when there is no vertex
};

struct Face {
    IndexSet vertices;
    IndexSet rays;
    long dim = -1;
    bool operator<(const Face& o) const {
        return std::tie(dim, vertices, rays) < std::tie(o.dim, o.vertices, o.rays);
    }
    bool operator==(const Face& o) const { return vertices == o.vertices && rays == o.rays; }
};

struct FaceLattice {
    std::vector<Face> faces;  // sorted by dimension, then vertex sets

    bool leq(std::size_t i, std::size_t j) const {
        return is_subset(faces[i].vertices, faces[j].vertices) && is_subset(faces[i].rays, faces[j].rays);
    }
    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (auto& F : faces) {
            if (F.dim < 0) continue;
            if (f.size() <= static_cast<std::size_t>(F.dim)) f.resize(F.dim + 1, 0);
            ++f[F.dim];
        }
        return f;
    }
};

namespace detail {

using Bits = boost::dynamic_bitset<>;

struct ConeDD {
    std::vector<IntVec> rays;
    std::vector<Bits> tight;  // rows vanishing on each ray
    std::vector<Vec> lineality;
};

// Extreme rays and lineality of {x : rows.x >= 0}.
inline ConeDD cone_dd(const std::vector<Vec>& rows_in, std::size_t dim) {
    ConeDD out;
    std::size_t m = rows_in.size();
    std::vector<IntVec> rows;
    for (auto& r : rows_in) rows.push_back(primitive(r));
    out.lineality = kernel_basis(rows_in, dim);
    if (m == 0) return out;
    // lexicographically first row basis
    RatMatrix rt(dim, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < dim; ++j) rt(j, i) = Rational(rows[i][j]);
    std::vector<std::size_t> basis_rows = rref(rt).pivots;
    std::size_t r = basis_rows.size();
    if (r == 0) return out;
    // coordinates y with x = B^T y
    std::vector<IntVec> M(m, IntVec(r));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < r; ++k) M[i][k] = dot(rows[i], rows[basis_rows[k]]);
    RatMatrix G(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) G(a, b) = Rational(M[basis_rows[a]][b]);
    std::vector<IntVec> Y;
    std::vector<Bits> Z;
    std::vector<bool> processed(m, false);
    for (std::size_t k = 0; k < r; ++k) {
        Vec e(r);
        e[k] = 1;
        Vec y = *solve(G, e);
        Y.push_back(primitive(y));
        Bits z(m);
        for (std::size_t l = 0; l < r; ++l)
            if (l != k) z.set(basis_rows[l]);
        Z.push_back(z);
    }
    for (auto b : basis_rows) processed[b] = true;
    // rows of the initial basis may vanish on rays through other rows
    for (std::size_t h = 0; h < m; ++h) {
        if (processed[h]) continue;
        std::vector<int> s(Y.size());
        std::vector<std::size_t> P, N, Zr;
        for (std::size_t j = 0; j < Y.size(); ++j) {
            s[j] = sgn(dot(M[h], Y[j]));
            (s[j] > 0 ? P : s[j] < 0 ? N : Zr).push_back(j);
        }
        processed[h] = true;
        if (N.empty()) {
            for (auto j : Zr) Z[j].set(h);
            continue;
        }
        std::vector<IntVec> NY;
        std::vector<Bits> NZ;
        for (std::size_t j = 0; j < Y.size(); ++j) {
            if (s[j] < 0) continue;
            NY.push_back(Y[j]);
            NZ.push_back(Z[j]);
            if (s[j] == 0) NZ.back().set(h);
        }
        for (auto p : P) {
            for (auto q : N) {
                Bits common = Z[p] & Z[q];
                if (common.count() + 2 < r) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < Y.size() && adjacent; ++o)
                    if (o != p && o != q && common.is_subset_of(Z[o])) adjacent = false;
                if (!adjacent) continue;
                Integer sp = dot(M[h], Y[p]), sq = dot(M[h], Y[q]);
                IntVec y(r);
                for (std::size_t k = 0; k < r; ++k) y[k] = sp * Y[q][k] - sq * Y[p][k];
                make_primitive(y);
                common.set(h);
                NY.push_back(std::move(y));
                NZ.push_back(std::move(common));
            }
        }
        Y = std::move(NY);
        Z = std::move(NZ);
    }
    for (std::size_t j = 0; j < Y.size(); ++j) {
        IntVec x(dim);
        for (std::size_t k = 0; k < r; ++k)
            if (sgn(Y[j][k]) != 0)
                for (std::size_t c = 0; c < dim; ++c) x[c] += Y[j][k] * rows[basis_rows[k]][c];
        make_primitive(x);
        out.rays.push_back(std::move(x));
        out.tight.push_back(Z[j]);
    }
    return out;
}

inline IndexSet bits_to_set(const Bits& b, std::size_t from, std::size_t to, std::size_t shift = 0) {
    IndexSet s;
    for (std::size_t i = from; i < to; ++i)
        if (b.test(i)) s.push_back(i - shift);
    return s;
}

}  // namespace detail

struct VtoHResult {
    HPolyhedron h;
    std::vector<IndexSet> facet_vertices;  // generator indices on each facet
    std::vector<IndexSet> facet_rays;
};

// Facets plus affine hull equations. Vertex list may contain non-extreme points.
inline VtoHResult dd_convert_VtoH_incidence(const VPolyhedron& v) {
    if (v.vertices.empty()) throw DomainError("V-polyhedron without vertices");
    std::size_t d = v.ambient_dim, nv = v.vertices.size();
    std::vector<Vec> gens;
    for (auto& p : v.vertices) gens.push_back(homogenize(p));
    for (auto& r : v.rays) {
        Vec g(d + 1);
        for (std::size_t i = 0; i < d; ++i) g[i + 1] = r[i];
        gens.push_back(g);
    }
    detail::ConeDD c = detail::cone_dd(gens, d + 1);
    VtoHResult res;
    res.h.ambient_dim = d;
    for (auto& l : c.lineality) {
        IntVec u = primitive(l);
        Vec a(d);
        for (std::size_t i = 0; i < d; ++i) a[i] = Rational(u[i + 1]);
        res.h.equations.push_back({a, Rational(-u[0])});
    }
    struct Item {
        Constraint c;
        IndexSet vs, rs;
    };
    std::vector<Item> items;
    for (std::size_t j = 0; j < c.rays.size(); ++j) {
        IndexSet vs = detail::bits_to_set(c.tight[j], 0, nv);
        if (vs.empty()) continue;
        Vec a(d);
        for (std::size_t i = 0; i < d; ++i) a[i] = Rational(c.rays[j][i + 1]);
        items.push_back({{a, Rational(-c.rays[j][0])}, vs, detail::bits_to_set(c.tight[j], nv, gens.size(), nv)});
    }
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.vs < y.vs; });
    for (auto& it : items) {
        res.h.inequalities.push_back(it.c);
        res.facet_vertices.push_back(it.vs);
        res.facet_rays.push_back(it.rs);
    }
    return res;
}

inline HPolyhedron dd_convert_VtoH(const VPolyhedron& v) { return dd_convert_VtoH_incidence(v).h; }

struct HtoVResult {
    VPolyhedron v;
    std::vector<IndexSet> vertex_tight;  // inequality indices tight at each vertex
    std::vector<IndexSet> ray_tight;
};

inline HtoVResult dd_convert_HtoV_incidence(const HPolyhedron& h) {
    std::size_t d = h.ambient_dim, mi = h.inequalities.size();
    std::vector<Vec> rows;
    auto hom = [&](const Constraint& c, int sign) {
        Vec r(d + 1);
        r[0] = -c.b * sign;
        for (std::size_t i = 0; i < d; ++i) r[i + 1] = c.a[i] * sign;
        return r;
    };
    for (auto& c : h.inequalities) rows.push_back(hom(c, 1));
    for (auto& c : h.equations) {
        rows.push_back(hom(c, 1));
        rows.push_back(hom(c, -1));
    }
    Vec t(d + 1);
    t[0] = 1;
    rows.push_back(t);
    detail::ConeDD c = detail::cone_dd(rows, d + 1);
    HtoVResult res;
    res.v.ambient_dim = d;
    for (auto& l : c.lineality) res.v.lineality.push_back(Vec(l.begin() + 1, l.end()));
    struct Item {
        Vec p;
        IndexSet tight;
    };
    std::vector<Item> verts, rays;
    for (std::size_t j = 0; j < c.rays.size(); ++j) {
        const IntVec& x = c.rays[j];
        Vec p(d);
        if (sgn(x[0]) > 0) {
            for (std::size_t i = 0; i < d; ++i) p[i] = Rational(x[i + 1], x[0]);
            for (auto& q : p) q.canonicalize();
            verts.push_back({p, detail::bits_to_set(c.tight[j], 0, mi)});
        } else {
            for (std::size_t i = 0; i < d; ++i) p[i] = Rational(x[i + 1]);
            rays.push_back({p, detail::bits_to_set(c.tight[j], 0, mi)});
        }
    }
    auto by_point = [](const Item& a, const Item& b) { return a.p < b.p; };
    std::sort(verts.begin(), verts.end(), by_point);
    std::sort(rays.begin(), rays.end(), by_point);
    if (!res.v.lineality.empty()) {
        // a pointed description is not available: report lineality only
        res.v.empty = false;
        res.v.vertices.clear();
        return res;
    }
    if (verts.empty()) {
        res.v.empty = true;
        return res;
    }
    for (auto& it : verts) {
        res.v.vertices.push_back(it.p);
        res.vertex_tight.push_back(it.tight);
    }
    for (auto& it : rays) {
        res.v.rays.push_back(it.p);
        res.ray_tight.push_back(it.tight);
    }
    return res;
}

inline VPolyhedron dd_convert_HtoV(const HPolyhedron& h) { return dd_convert_HtoV_incidence(h).v; }

// All nonempty intersections of subfamilies of the given sets.
inline std::vector<IndexSet> intersection_closure(const std::vector<IndexSet>& gens) {
    std::set<IndexSet> seen;
    std::vector<IndexSet> queue;
    for (auto& g : gens)
        if (!g.empty() && seen.insert(g).second) queue.push_back(g);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto& g : gens) {
            IndexSet x = set_intersection(queue[i], g);
            if (!x.empty() && seen.insert(x).second) queue.push_back(x);
        }
    }
    return {seen.begin(), seen.end()};
}

// Bounded faces of a lifted polyhedron whose recession cone is spanned by e_0.
inline FaceLattice lower_faces(const VPolyhedron& lifted) {
    std::size_t D = lifted.ambient_dim;
    if (lifted.rays.size() != 1 || sgn(lifted.rays[0][0]) <= 0 ||
        !std::all_of(lifted.rays[0].begin() + 1, lifted.rays[0].end(), [](const Rational& x) { return sgn(x) == 0; }))
        throw DomainError("lower_faces needs recession cone generated by the first unit vector");
    VtoHResult r = dd_convert_VtoH_incidence(lifted);
    std::vector<IndexSet> lower;
    for (std::size_t i = 0; i < r.h.inequalities.size(); ++i)
        if (sgn(r.h.inequalities[i].a[0]) > 0) lower.push_back(r.facet_vertices[i]);
    std::vector<IndexSet> all = intersection_closure(r.facet_vertices);
    if (r.h.inequalities.empty()) all.push_back(iota_set(lifted.vertices.size()));
    FaceLattice L;
    for (auto& s : all) {
        bool bounded = std::any_of(lower.begin(), lower.end(), [&](const IndexSet& f) { return is_subset(s, f); });
        if (!bounded) continue;
        std::vector<Vec> pts;
        for (auto i : s) pts.push_back(lifted.vertices[i]);
        L.faces.push_back({s, {}, affine_dim(pts)});
    }
    (void)D;
    std::sort(L.faces.begin(), L.faces.end());
    return L;
}

inline std::size_t polyhedron_dim(const HPolyhedron& h) {
    std::vector<Vec> rows;
    for (auto& e : h.equations) rows.push_back(e.a);
    return h.ambient_dim - (rows.empty() ? 0 : rank(rows, h.ambient_dim));
}

// Vertex pairs spanning edges of a polytope given by its vertices.
inline std::vector<std::pair<std::size_t, std::size_t>> polytope_edges(const VPolyhedron& v) {
    if (!v.rays.empty()) throw DomainError("polytope_edges needs a bounded polyhedron");
    VtoHResult r = dd_convert_VtoH_incidence(v);
    std::size_t n = v.vertices.size(), dim = polyhedron_dim(r.h);
    std::vector<IndexSet> inc(n);
    for (std::size_t f = 0; f < r.facet_vertices.size(); ++f)
        for (auto i : r.facet_vertices[f]) inc[i].push_back(f);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (dim == 0) return edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            IndexSet common = set_intersection(inc[i], inc[j]);
            if (common.size() + 1 < dim) continue;
            if (v.vertices[i] == v.vertices[j]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k)
                if (k != i && k != j && is_subset(common, inc[k])) ok = false;
            if (ok) edges.emplace_back(i, j);
        }
    return edges;
}

// Face lattice of a polytope, including the polytope itself.
inline FaceLattice polytope_face_lattice(const VPolyhedron& v) {
    VtoHResult r = dd_convert_VtoH_incidence(v);
    std::vector<IndexSet> all = intersection_closure(r.facet_vertices);
    all.push_back(iota_set(v.vertices.size()));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    FaceLattice L;
    for (auto& s : all) {
        std::vector<Vec> pts;
        for (auto i : s) pts.push_back(v.vertices[i]);
        L.faces.push_back({s, {}, affine_dim(pts)});
    }
    std::sort(L.faces.begin(), L.faces.end());
    return L;
}


// Is there a vertex bijection carrying one family of facets onto the other? Backtracking.
inline bool incidence_isomorphic(std::size_t nv1, const std::vector<IndexSet>& f1, std::size_t nv2,
                                 const std::vector<IndexSet>& f2) {
    if (nv1 != nv2 || f1.size() != f2.size()) return false;
    std::size_t n = nv1;
    auto profile = [&](const std::vector<IndexSet>& F) {
        std::vector<std::vector<std::size_t>> p(n);  // sizes of facets through each vertex
        for (auto& f : F)
            for (auto v : f) p[v].push_back(f.size());
        for (auto& x : p) std::sort(x.begin(), x.end());
        return p;
    };
    auto p1 = profile(f1), p2 = profile(f2);
    std::set<IndexSet> target(f2.begin(), f2.end());
    std::vector<std::size_t> map(n, SIZE_MAX);
    std::vector<bool> used(n, false);
    auto partial_ok = [&](std::size_t upto) {
        // every facet of f1 lying in mapped vertices must map into a facet of f2 of equal size
        for (auto& f : f1) {
            IndexSet img;
            bool complete = true;
            for (auto v : f) {
                if (v >= upto) {
                    complete = false;
                    break;
                }
                img.push_back(map[v]);
            }
            if (!complete) continue;
            normalize(img);
            if (!target.count(img)) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
        if (v == n) return partial_ok(n);
        for (std::size_t u = 0; u < n; ++u) {
            if (used[u] || p1[v] != p2[u]) continue;
            map[v] = u;
            used[u] = true;
            if (partial_ok(v + 1) && rec(v + 1)) return true;
            used[u] = false;
        }
        map[v] = SIZE_MAX;
        return false;
    };
    return rec(0);
}

// Vertex sets of the facets of a polytope given by points (extreme points only, reindexed).
inline std::pair<std::size_t, std::vector<IndexSet>> polytope_facets(const VPolyhedron& v) {
    auto L = polytope_face_lattice(v);
    IndexSet verts;
    for (auto& f : L.faces)
        if (f.dim == 0) verts.push_back(f.vertices[0]);
    long top = 0;
    for (auto& f : L.faces) top = std::max(top, f.dim);
    std::vector<IndexSet> facets;
    for (auto& f : L.faces)
        if (f.dim == top - 1) {
            IndexSet g;
            for (auto i : f.vertices)
                if (contains(verts, i)) g.push_back(std::lower_bound(verts.begin(), verts.end(), i) - verts.begin());
            facets.push_back(g);
        }
    return {verts.size(), facets};
}

}  // namespace splitspan
