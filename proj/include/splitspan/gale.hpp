#pragma once

#include "splits.hpp"

namespace splitspan {

// One vector per point; together they span the dependencies of the homogenized points.
struct GaleDual {
    std::vector<Vec> vectors;
    std::size_t dim = 0;
};

inline GaleDual gale_dual(const PointConfiguration& A) {
    std::size_t n = A.size();
    std::vector<Vec> cols(A.dim() + 1, Vec(n));  // rows of V transposed
    for (std::size_t i = 0; i < n; ++i) {
        Vec h = homogenize(A[i]);
        for (std::size_t j = 0; j < h.size(); ++j) cols[j][i] = h[j];
    }
    std::vector<Vec> K = kernel_basis(cols, n);
    GaleDual G;
    G.dim = K.size();
    G.vectors.assign(n, Vec(G.dim));
    for (std::size_t j = 0; j < K.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) G.vectors[i][j] = K[j][i];
    return G;
}

inline Vec weight_to_chamber_point(const PointConfiguration& A, const GaleDual& G, const Weight& w) {
    if (w.size() != A.size()) throw DomainError("weight length differs from configuration size");
    Vec x(G.dim);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < G.dim; ++j) x[j] += w[i] * G.vectors[i][j];
    return x;
}

// F is a face of the regular subdivision iff the chamber point is a strictly positive
// combination of the dual vectors outside F.
inline bool chamber_face_test(const PointConfiguration& A, const GaleDual& G, const Weight& w, const IndexSet& F) {
    Vec x = weight_to_chamber_point(A, G, w);
    IndexSet out = set_difference(iota_set(A.size()), F);
    if (out.empty()) return is_zero(x);
    std::size_t m = out.size();
    std::vector<Constraint> strict, eqs;
    for (std::size_t i = 0; i < m; ++i) {
        Vec e(m);
        e[i] = 1;
        strict.push_back({e, 0});
    }
    for (std::size_t j = 0; j < G.dim; ++j) {
        Vec row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = G.vectors[out[i]][j];
        eqs.push_back({row, x[j]});
    }
    return strict_lp_feasible(strict, {}, eqs, m).has_value();
}

namespace detail {

// Is b the only vector of the family in some open halfspace?
inline bool alone_in_halfspace(const std::vector<Vec>& B, std::size_t i, std::size_t dim) {
    if (dim == 0 || is_zero(B[i])) return false;
    std::vector<Constraint> strict{{B[i], 0}}, weak;
    for (std::size_t j = 0; j < B.size(); ++j)
        if (j != i) weak.push_back({Rational(-1) * B[j], 0});
    return strict_lp_feasible(strict, weak, {}, dim).has_value();
}

// A point configuration whose Gale dual is B (up to a change of basis).
inline PointConfiguration configuration_from_dual(const std::vector<Vec>& B, std::size_t dim) {
    std::size_t N = B.size();
    std::vector<Vec> cols(dim, Vec(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < dim; ++j) cols[j][i] = B[i][j];
    std::vector<Vec> K = kernel_basis(cols, N);
    // a dependency-free coordinate of constant sign to dehomogenize by
    std::vector<Constraint> weak, eqs;
    for (std::size_t i = 0; i < N; ++i) {
        Vec e(N);
        e[i] = 1;
        weak.push_back({e, 1});
    }
    for (auto& c : cols) eqs.push_back({c, 0});
    auto lam = strict_lp_feasible({}, weak, eqs, N);
    if (!lam) throw DomainError("vector configuration is not totally cyclic");
    std::vector<Vec> basis{*lam};
    for (auto& k : K) {
        basis.push_back(k);
        if (rank(basis, N) < basis.size()) basis.pop_back();
    }
    std::vector<Vec> pts(N, Vec(basis.size() - 1));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 1; j < basis.size(); ++j) pts[i][j - 1] = basis[j][i] / (*lam)[i];
    return PointConfiguration(pts);
}

}  // namespace detail

struct SameSecondaryResult {
    PointConfiguration polytope;
    IndexSet duplicated;  // original indices whose dual vector got a copy, in order
};

inline SameSecondaryResult polytope_with_same_secondary(const PointConfiguration& A) {
    GaleDual G = gale_dual(A);
    std::vector<Vec> B = G.vectors;
    SameSecondaryResult res{A, {}};
    std::vector<std::size_t> origin = iota_set(A.size());
    for (;;) {
        std::size_t hit = B.size();
        for (std::size_t i = 0; i < B.size() && hit == B.size(); ++i)
            if (detail::alone_in_halfspace(B, i, G.dim)) hit = i;
        if (hit == B.size()) break;
        B.push_back(B[hit]);
        origin.push_back(origin[hit]);
        res.duplicated.push_back(origin[hit]);
    }
    if (!res.duplicated.empty()) res.polytope = detail::configuration_from_dual(B, G.dim);
    return res;
}

struct LiftedPolytope {
    PointConfiguration polytope;  // (a, w(a)) for kept a, then (a, -w(a))
    Weight weight;
    IndexSet kept;  // indices into the input
    Rational shift;  // subtracted from the input weight
};

inline LiftedPolytope pc_to_polytope_tightspan(const PointConfiguration& A, const Weight& w) {
    if (w.size() != A.size()) throw DomainError("weight length differs from configuration size");
    // one copy of each point, lowest weight wins
    IndexSet uniq;
    for (std::size_t i = 0; i < A.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < A.size() && keep; ++j)
            if (j != i && A[j] == A[i] && (w[j] < w[i] || (w[j] == w[i] && j < i))) keep = false;
        if (keep) uniq.push_back(i);
    }
    PointConfiguration U(A.subset(uniq));
    Weight wu;
    for (auto i : uniq) wu.push_back(w[i]);
    Subdivision S = regular_subdivision(U, wu);
    IndexSet verts;
    for (auto& C : S.cells)
        for (auto i : C)
            if (!contains(verts, i) && !in_convex_hull(U, set_difference(C, {i}), U[i])) verts.push_back(i);
    normalize(verts);

    LiftedPolytope L;
    Rational top = wu[verts[0]];
    for (auto i : verts) top = std::max(top, wu[i]);
    L.shift = sgn(top) >= 0 ? Rational(top + 1) : Rational(0);
    std::vector<Vec> pts;
    for (int sign : {1, -1})
        for (auto i : verts) {
            Rational h = wu[i] - L.shift;
            Vec p = U[i];
            p.push_back(sign * h);
            pts.push_back(p);
            L.weight.push_back(h);
        }
    for (auto i : verts) L.kept.push_back(uniq[i]);
    L.polytope = PointConfiguration(pts);
    return L;
}

struct TightSpanRealization {
    PointConfiguration config;  // negated polar vertices, then the origin
    Weight weight;
    Vec translation;  // tight span is {0} x (P - translation)
};

inline TightSpanRealization polytope_as_tightspan(const VPolyhedron& P) {
    if (!P.rays.empty() || P.vertices.empty()) throw DomainError("need a nonempty bounded polytope");
    std::size_t d = P.vertices[0].size();
    if (affine_dim(P.vertices) != static_cast<long>(d)) throw DomainError("polytope is not full-dimensional");
    TightSpanRealization R;
    R.translation = Vec(d);
    for (auto& v : P.vertices) R.translation = R.translation + v;
    R.translation = (Rational(1) / static_cast<long>(P.vertices.size())) * R.translation;
    HPolyhedron polar;
    polar.ambient_dim = d;
    for (auto& v : P.vertices) polar.inequalities.push_back({Rational(-1) * (v - R.translation), -1});
    VPolyhedron Q = dd_convert_HtoV(polar);
    if (!Q.rays.empty() || !Q.lineality.empty()) throw DomainError("origin is not interior after translation");
    std::vector<Vec> pts;
    for (auto& u : Q.vertices) {
        pts.push_back(Rational(-1) * u);
        R.weight.push_back(1);
    }
    pts.push_back(Vec(d));
    R.weight.push_back(0);
    R.config = PointConfiguration(pts);
    return R;
}

}  // namespace splitspan
