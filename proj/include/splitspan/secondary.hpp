#pragma once

#include "ksplit.hpp"

#include <future>
#include <thread>

namespace splitspan {

struct SizeGuards {
    std::size_t max_points = 10;
    std::size_t max_dim = 4;
    std::size_t jobs = 1;
};

inline void check_guards(const PointConfiguration& A, const SizeGuards& g) {
    if (A.size() > g.max_points)
        throw GuardError("max-points", std::to_string(A.size()) + " points exceed the limit of " + std::to_string(g.max_points));
    if (A.dim() > g.max_dim)
        throw GuardError("max-dim", "dimension " + std::to_string(A.dim()) + " exceeds the limit of " + std::to_string(g.max_dim));
}

struct GKZVector {
    Vec coordinates;
    Subdivision triangulation;
};

struct SecondaryFacet {
    Weight normal;  // inner normal, read as a weight
    Rational offset;
    Subdivision subdivision;
    IndexSet tight_vertices;
};

struct SecondaryPolytope {
    std::vector<GKZVector> vertices;
    std::vector<SecondaryFacet> facets;
    std::vector<Constraint> equations;
    std::size_t dim = 0;
};

struct SplitInequality {
    Weight normal;
    Rational offset;
    std::size_t level;  // 1, 2, or k
    Subdivision subdivision;
};

struct SplitPolyhedron {
    std::size_t level = 2;
    std::vector<SplitInequality> inequalities;
    std::vector<Constraint> affine_equations;
};

namespace detail {

// Runs f(i) for i < n on up to `jobs` threads; results land by index.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, std::size_t jobs, F f) {
    std::vector<T> out(n);
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::future<void>> workers;
    std::size_t nt = std::min(jobs, n);
    for (std::size_t t = 0; t < nt; ++t)
        workers.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t i = t; i < n; i += nt) out[i] = f(i);
        }));
    for (auto& w : workers) w.get();
    return out;
}

// h with h > 0 on s \ t, h < 0 on t \ s, h = 0 on s cap t (homogeneous coordinates).
inline bool simplices_compatible(const PointConfiguration& A, const IndexSet& s, const IndexSet& t) {
    std::vector<Constraint> strict, eqs;
    for (auto a : set_union(s, t)) {
        Vec h = homogenize(A[a]);
        bool in_s = contains(s, a), in_t = contains(t, a);
        if (in_s && in_t) eqs.push_back({h, 0});
        else if (in_s) strict.push_back({h, 0});
        else strict.push_back({Rational(-1) * h, 0});
    }
    return strict_lp_feasible(strict, {}, eqs, A.dim() + 1).has_value();
}

// Point of conv A off every hyperplane spanned by points of A.
inline Vec generic_interior_point(const PointConfiguration& A) {
    std::size_t d = A.dim(), n = A.size();
    std::vector<Vec> hyperplanes;
    for_each_subset(n, d, [&](const IndexSet& s) {
        auto h = spanned_hyperplane(A, s);
        if (h) hyperplanes.push_back(*h);
    });
    VPolyhedron v;
    v.ambient_dim = d;
    v.vertices = A.points;
    HPolyhedron H = dd_convert_VtoH(v);
    Vec c = centroid(A.points);
    for (long k = 1;; ++k) {
        Vec g = c;
        Rational t(1, 1);
        for (std::size_t j = 0; j < d; ++j) {
            t /= Rational(7 * k + 3);
            g[j] += t;
        }
        bool ok = true;
        for (auto& h : hyperplanes) ok = ok && sgn(dot(h, homogenize(g))) != 0;
        for (auto& ineq : H.inequalities) ok = ok && dot(ineq.a, g) > ineq.b;
        if (ok) return g;
    }
}

}  // namespace detail

// All triangulations of A, cells being affinely independent (d+1)-subsets; unused points allowed.
inline std::vector<Subdivision> enumerate_triangulations(const PointConfiguration& A, const SizeGuards& guards = {}) {
    check_guards(A, guards);
    std::size_t n = A.size(), d = A.dim();
    std::vector<IndexSet> simplices;
    detail::for_each_subset(n, d + 1, [&](const IndexSet& s) {
        if (dim_of(A, s) == static_cast<long>(d)) simplices.push_back(s);
    });
    std::map<IndexSet, std::size_t> index;
    for (std::size_t i = 0; i < simplices.size(); ++i) index[simplices[i]] = i;
    std::vector<IndexSet> boundary = facets_of(A, iota_set(n));
    auto interior_facet = [&](const IndexSet& f) { return is_interior_face(boundary, f); };

    // compatibility memo: 0 unknown, 1 yes, 2 no
    std::vector<std::vector<char>> compat(simplices.size(), std::vector<char>(simplices.size(), 0));
    auto compatible = [&](std::size_t i, std::size_t j) {
        if (!compat[i][j]) compat[i][j] = compat[j][i] = detail::simplices_compatible(A, simplices[i], simplices[j]) ? 1 : 2;
        return compat[i][j] == 1;
    };

    Vec g = detail::generic_interior_point(A);
    std::vector<std::size_t> start;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        Vec beta = detail::barycentric(A, simplices[i], g);
        if (std::all_of(beta.begin(), beta.end(), [](const Rational& x) { return sgn(x) > 0; })) start.push_back(i);
    }

    std::vector<Subdivision> out;
    std::vector<std::size_t> chosen;
    std::function<void()> extend = [&]() {
        // first facet of a chosen simplex that is interior and covered once
        std::map<IndexSet, int> count;
        std::map<IndexSet, std::size_t> owner;
        for (auto c : chosen) {
            const IndexSet& s = simplices[c];
            for (std::size_t drop = 0; drop <= d; ++drop) {
                IndexSet f = s;
                f.erase(f.begin() + drop);
                ++count[f];
                owner[f] = c;
            }
        }
        std::optional<IndexSet> open;
        for (auto& [f, k] : count)
            if (k == 1 && interior_facet(f)) {
                open = f;
                break;
            }
        if (!open) {
            std::vector<IndexSet> cells;
            for (auto c : chosen) cells.push_back(simplices[c]);
            out.emplace_back(cells);
            return;
        }
        const IndexSet& f = *open;
        const IndexSet& s = simplices[owner[f]];
        std::size_t apex = set_difference(s, f)[0];
        Vec h = *detail::spanned_hyperplane(A, f);
        int side = sgn(dot(h, homogenize(A[apex])));
        for (std::size_t p = 0; p < n; ++p) {
            if (contains(f, p) || sgn(dot(h, homogenize(A[p]))) != -side) continue;
            IndexSet t = set_union(f, {p});
            std::size_t ti = index.at(t);
            bool ok = true;
            for (auto c : chosen)
                if (!compatible(c, ti)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(ti);
            extend();
            chosen.pop_back();
        }
    };
    for (auto s0 : start) {
        chosen = {s0};
        extend();
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline GKZVector gkz_vector(const PointConfiguration& A, const Subdivision& T) {
    GKZVector x;
    x.triangulation = T;
    x.coordinates.assign(A.size(), 0);
    for (auto& s : T.cells) {
        if (s.size() != A.dim() + 1 || dim_of(A, s) != static_cast<long>(A.dim()))
            throw DomainError("cell is not a full-dimensional simplex");
        Rational v = simplex_volume(A, s);
        for (auto a : s) x.coordinates[a] += v;
    }
    return x;
}

// <w, x_T> for any triangulation T refining Sigma_w, computed cell by cell.
inline Rational refined_gkz_value(const PointConfiguration& A, const Weight& w, const Subdivision& S) {
    Rational total = 0;
    for (auto& C : S.cells)
        for (auto& s : pulling_triangulation(A, C)) {
            Rational sum = 0;
            for (auto a : s) sum += w[a];
            total += simplex_volume(A, s) * sum;
        }
    return total;
}

// Equations of aff Sec(A): sum_a l(a) x_a = const for the affine functions l.
inline std::vector<Constraint> secondary_equations(const PointConfiguration& A) {
    std::vector<Constraint> eqs;
    Subdivision T(pulling_triangulation(A, iota_set(A.size())));
    Vec x = gkz_vector(A, T).coordinates;
    for (std::size_t j = 0; j <= A.dim(); ++j) {
        Vec row(A.size());
        for (std::size_t a = 0; a < A.size(); ++a) row[a] = homogenize(A[a])[j];
        eqs.push_back({row, dot(row, x)});
    }
    return eqs;
}

inline SecondaryPolytope secondary_polytope(const PointConfiguration& A, const SizeGuards& guards = {}) {
    auto tri = enumerate_triangulations(A, guards);
    auto regular = detail::parallel_map<char>(tri.size(), guards.jobs,
                                              [&](std::size_t i) { return static_cast<char>(is_regular(A, tri[i]).has_value()); });
    SecondaryPolytope P;
    for (std::size_t i = 0; i < tri.size(); ++i)
        if (regular[i]) P.vertices.push_back(gkz_vector(A, tri[i]));
    P.equations = secondary_equations(A);
    std::size_t n = A.size();
    if (P.vertices.size() == 1) {
        P.dim = 0;
        return P;
    }
    VPolyhedron v;
    v.ambient_dim = n;
    for (auto& x : P.vertices) v.vertices.push_back(x.coordinates);
    VtoHResult h = dd_convert_VtoH_incidence(v);
    P.dim = n - h.h.equations.size();
    auto facets = detail::parallel_map<SecondaryFacet>(h.h.inequalities.size(), guards.jobs, [&](std::size_t f) {
        SecondaryFacet F;
        F.normal = h.h.inequalities[f].a;
        F.offset = h.h.inequalities[f].b;
        F.subdivision = regular_subdivision(A, F.normal);
        F.tight_vertices = h.facet_vertices[f];
        return F;
    });
    P.facets = std::move(facets);
    return P;
}

// <w, x> >= c with c the minimum over the GKZ vertices.
inline std::pair<Weight, Rational> facet_inequality_from_weight(const PointConfiguration& A, const Weight& w,
                                                                const SecondaryPolytope& context) {
    if (!is_coarsest(A, regular_subdivision(A, w))) throw DomainError("weight does not induce a coarsest subdivision");
    std::optional<Rational> c;
    for (auto& x : context.vertices) {
        Rational v = dot(w, x.coordinates);
        if (!c || v < *c) c = v;
    }
    return {w, *c};
}

inline std::pair<Weight, Rational> facet_inequality_from_weight(const PointConfiguration& A, const Weight& w) {
    Subdivision S = regular_subdivision(A, w);
    if (!is_coarsest(A, S)) throw DomainError("weight does not induce a coarsest subdivision");
    return {w, refined_gkz_value(A, w, S)};
}

// Coarsest regular subdivisions, one per facet of the secondary polytope.
inline std::vector<Subdivision> enumerate_coarsest(const PointConfiguration& A, const SizeGuards& guards = {}) {
    SecondaryPolytope P = secondary_polytope(A, guards);
    std::vector<Subdivision> out;
    for (auto& f : P.facets) out.push_back(f.subdivision);
    auto ok = detail::parallel_map<char>(out.size(), guards.jobs, [&](std::size_t i) { return static_cast<char>(is_coarsest(A, out[i])); });
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!ok[i]) throw std::logic_error("secondary facet does not give a coarsest subdivision");
    std::sort(out.begin(), out.end());
    return out;
}

inline SplitPolyhedron split_polyhedron(const PointConfiguration& A, std::size_t k) {
    if (k < 2) throw DomainError("split polyhedron level must be at least 2");
    SplitPolyhedron P;
    P.level = k;
    P.affine_equations = secondary_equations(A);
    for (auto& o : one_splits(A)) {
        Weight w = one_split_weight(A, o.point_index);
        Subdivision S({set_difference(iota_set(A.size()), {o.point_index})});
        P.inequalities.push_back({w, refined_gkz_value(A, w, S), 1, S});
    }
    for (auto& t : two_splits(A)) {
        Weight w = split_weight(A, t);
        P.inequalities.push_back({w, refined_gkz_value(A, w, t.subdivision()), 2, t.subdivision()});
    }
    for (std::size_t l = 3; l <= std::min(k, A.dim() + 1); ++l)
        for (auto& K : enumerate_ksplits(A, l)) {
            Weight w = ksplit_weight(A, K);
            P.inequalities.push_back({w, refined_gkz_value(A, w, K.subdivision), l, K.subdivision});
        }
    return P;
}

// Inequality modulo affine functions: zero on a fixed affine basis, primitive integer.
inline std::pair<Vec, Rational> normalize_inequality(const PointConfiguration& A, const Weight& w, const Rational& offset) {
    IndexSet B = detail::affine_basis(A, iota_set(A.size()));
    auto c = affine_interpolant(A, B, w);
    Vec reduced(A.size());
    Vec ell(A.size());
    for (std::size_t a = 0; a < A.size(); ++a) {
        ell[a] = eval_affine(*c, A[a]);
        reduced[a] = w[a] - ell[a];
    }
    // <ell, x> is the same constant on aff Sec
    Subdivision T(pulling_triangulation(A, iota_set(A.size())));
    Rational shift = dot(ell, gkz_vector(A, T).coordinates);
    Vec full = reduced;
    full.push_back(offset - shift);
    Vec prim = primitive_vec(full);
    if (is_zero(reduced)) return {reduced, offset - shift};
    // primitive_vec keeps the sign, so the inequality direction survives
    Rational back = prim.back();
    prim.pop_back();
    return {prim, back};
}

inline bool is_totally_k_splittable(const PointConfiguration& A, std::size_t k, const SizeGuards& guards = {}) {
    SecondaryPolytope P = secondary_polytope(A, guards);
    SplitPolyhedron S = split_polyhedron(A, k);
    std::set<std::pair<Vec, Rational>> a, b;
    for (auto& f : P.facets) a.insert(normalize_inequality(A, f.normal, f.offset));
    for (auto& i : S.inequalities) b.insert(normalize_inequality(A, i.normal, i.offset));
    return a == b;
}

}  // namespace splitspan
