#pragma once

#include "splits.hpp"

#include <set>

namespace splitspan {

struct KSplit {
    Subdivision subdivision;
    std::size_t k = 0;
    IndexSet core_face;
    AffineSubspace core_subspace;
};

enum class ShapeKind {
    simplex,
    triangle_fan,
    glued_triangles,
    polygon,
    pyramid,
    bipyramid,
    stacked_tetrahedra,
    nonplanar_book,
    mixed,
    other
};

inline const char* to_string(ShapeKind k) {
    switch (k) {
        case ShapeKind::simplex: return "simplex";
        case ShapeKind::triangle_fan: return "triangle_fan";
        case ShapeKind::glued_triangles: return "glued_triangles";
        case ShapeKind::polygon: return "polygon";
        case ShapeKind::pyramid: return "pyramid";
        case ShapeKind::bipyramid: return "bipyramid";
        case ShapeKind::stacked_tetrahedra: return "stacked_tetrahedra";
        case ShapeKind::nonplanar_book: return "nonplanar_book";
        case ShapeKind::mixed: return "mixed";
        case ShapeKind::other: return "other";
    }
    return "other";
}

struct TightSpanShape {
    ShapeKind kind = ShapeKind::other;
    std::vector<std::size_t> f_vector;
    std::size_t num_vertices = 0;
    std::vector<IndexSet> maximal_faces;  // as sets of cells
    std::vector<long> maximal_dims;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> max_face_facets;  // number of codim-1 faces of each maximal face
};

namespace detail {

// Greedy affinely independent subset of C spanning aff C.
inline IndexSet affine_basis(const PointConfiguration& A, const IndexSet& C) {
    IndexSet B;
    std::vector<Vec> rows;
    for (auto i : C) {
        rows.push_back(homogenize(A[i]));
        if (rank(rows, A.dim() + 1) == rows.size()) B.push_back(i);
        else rows.pop_back();
    }
    return B;
}

// Coefficients beta with sum beta_b (1,b) = (1,p) for the affine basis B.
inline Vec barycentric(const PointConfiguration& A, const IndexSet& B, const Vec& p) {
    std::size_t D = A.dim() + 1;
    RatMatrix m(D, B.size());
    for (std::size_t j = 0; j < B.size(); ++j) {
        Vec h = homogenize(A[B[j]]);
        for (std::size_t r = 0; r < D; ++r) m(r, j) = h[r];
    }
    auto x = solve(m, homogenize(p));
    if (!x) throw DomainError("point outside the affine span of a cell");
    return *x;
}

// Row e_a - sum beta_b e_b: zero iff w(a) equals the affine interpolation of w on B at a.
inline Vec fold_row(const PointConfiguration& A, const IndexSet& B, std::size_t a) {
    Vec row(A.size());
    Vec beta = barycentric(A, B, A[a]);
    row[a] += 1;
    for (std::size_t j = 0; j < B.size(); ++j) row[B[j]] -= beta[j];
    return row;
}

inline std::vector<Vec> flatness_rows(const PointConfiguration& A, const Subdivision& S) {
    std::vector<Vec> rows;
    for (auto& C : S.cells) {
        IndexSet B = affine_basis(A, C);
        for (auto a : C)
            if (!contains(B, a)) rows.push_back(fold_row(A, B, a));
    }
    return rows;
}

inline std::optional<AffineSubspace> intersect(const AffineSubspace& U, const AffineSubspace& V) {
    std::size_t n = U.ambient_dim(), a = U.dim(), b = V.dim();
    RatMatrix m(n, a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t r = 0; r < n; ++r) m(r, i) = U.direction_basis[i][r];
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t r = 0; r < n; ++r) m(r, a + j) = -V.direction_basis[j][r];
    auto x = a + b == 0 ? (U.basepoint == V.basepoint ? std::optional<Vec>(Vec{}) : std::nullopt)
                        : solve(m, V.basepoint - U.basepoint);
    if (!x) return std::nullopt;
    AffineSubspace out;
    out.basepoint = U.basepoint;
    for (std::size_t i = 0; i < a; ++i) out.basepoint = out.basepoint + (*x)[i] * U.direction_basis[i];
    std::vector<Vec> dirs;
    if (a + b > 0)
        for (auto& k : kernel_basis(m)) {
            Vec v(n);
            for (std::size_t i = 0; i < a; ++i) v = v + k[i] * U.direction_basis[i];
            if (!is_zero(v)) dirs.push_back(v);
        }
    if (!dirs.empty()) out.direction_basis = row_space_basis(dirs, n);
    return out;
}

inline bool same_subspace(const AffineSubspace& U, const AffineSubspace& V) {
    if (U.dim() != V.dim() || !V.contains(U.basepoint)) return false;
    for (auto& d : U.direction_basis)
        if (!V.contains(V.basepoint + d)) return false;
    return true;
}

// Coordinates in the affine chart (basepoint, direction basis) of a subspace containing p.
inline Vec chart_coordinates(const AffineSubspace& S, const Vec& p) {
    std::size_t n = S.ambient_dim(), m = S.dim();
    RatMatrix M(n, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < n; ++r) M(r, j) = S.direction_basis[j][r];
    auto x = solve(M, p - S.basepoint);
    if (!x) throw DomainError("point outside the chart");
    return *x;
}

inline AffineSubspace chart_subspace(const AffineSubspace& S, const AffineSubspace& U) {
    AffineSubspace out;
    out.basepoint = chart_coordinates(S, U.basepoint);
    std::vector<Vec> dirs;
    Vec zero = chart_coordinates(S, S.basepoint);
    for (auto& d : U.direction_basis) dirs.push_back(chart_coordinates(S, S.basepoint + d) - zero);
    if (!dirs.empty()) out.direction_basis = row_space_basis(dirs, S.dim());
    return out;
}

inline Rational centroid_coordinate(const std::vector<Vec>& pts, std::size_t j) {
    Rational s = 0;
    for (auto& p : pts) s += p[j];
    return s / Rational(static_cast<long>(pts.size()));
}

inline Vec centroid(const std::vector<Vec>& pts) {
    Vec c(pts[0].size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = centroid_coordinate(pts, j);
    return c;
}

// Visit restricted growth strings of length m; block[i] is the block of item i.
inline bool for_each_partition(std::size_t m, const std::function<bool(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> block(m, 0);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) -> bool {
        if (i == m) return f(block);
        for (std::size_t b = 0; b <= used && b < m; ++b) {
            block[i] = b;
            if (rec(i + 1, std::max(used, b + 1))) return true;
        }
        return false;
    };
    return m == 0 ? f(block) : rec(0, 0);
}

}  // namespace detail

// Witness weight for S, or nullopt when S is not regular.
inline std::optional<Weight> is_regular(const PointConfiguration& A, const Subdivision& S) {
    std::vector<Constraint> strict, eqs;
    for (auto& C : S.cells) {
        IndexSet B = detail::affine_basis(A, C);
        if (B.size() != A.dim() + 1) return std::nullopt;
        for (std::size_t a = 0; a < A.size(); ++a) {
            if (contains(B, a)) continue;
            Vec row = detail::fold_row(A, B, a);
            if (contains(C, a)) eqs.push_back({row, 0});
            else strict.push_back({row, 0});
        }
    }
    auto w = strict_lp_feasible(strict, {}, eqs, A.size());
    if (!w) return std::nullopt;
    if (!induces_subdivision(A, *w, S)) return std::nullopt;
    return w;
}

// Some coarser valid subdivision, other than S and the trivial one, obtained by merging cells.
inline std::optional<Subdivision> find_coarsening(const PointConfiguration& A, const Subdivision& S,
                                                  std::size_t max_cells = 9) {
    std::size_t m = S.size();
    if (m > max_cells) throw GuardError("max-cells", "merge search over " + std::to_string(m) + " cells");
    IndexSet unused = set_difference(iota_set(A.size()), S.used_points());
    if (unused.size() > 12) throw GuardError("max-points", "too many unused points for merge search");
    Subdivision trivial = trivial_subdivision(A);
    std::optional<Subdivision> found;
    detail::for_each_partition(m, [&](const std::vector<std::size_t>& block) {
        std::size_t nb = m == 0 ? 0 : *std::max_element(block.begin(), block.end()) + 1;
        std::vector<IndexSet> blocks(nb);
        for (std::size_t i = 0; i < m; ++i) blocks[block[i]] = set_union(blocks[block[i]], S.cells[i]);
        // which blocks' hulls contain each unused point
        std::vector<std::vector<std::size_t>> holders(unused.size());
        for (std::size_t u = 0; u < unused.size(); ++u)
            for (std::size_t b = 0; b < nb; ++b)
                if (in_convex_hull(A, blocks[b], A[unused[u]])) holders[u].push_back(b);
        for (std::size_t mask = 0; mask < (std::size_t{1} << unused.size()); ++mask) {
            if (nb == m && mask == 0) continue;
            std::vector<IndexSet> cells = blocks;
            for (std::size_t u = 0; u < unused.size(); ++u)
                if (mask >> u & 1)
                    for (auto b : holders[u]) cells[b] = set_union(cells[b], {unused[u]});
            Subdivision T(cells);
            if (T == S || T == trivial) continue;
            if (validate_subdivision(A, T)) {
                found = T;
                return true;
            }
        }
        return false;
    });
    return found;
}

inline bool is_trivial(const PointConfiguration& A, const Subdivision& S) {
    return S.size() == 1 && S.cells[0].size() == A.size();
}

inline bool is_coarsest(const PointConfiguration& A, const Subdivision& S) {
    Verdict v = validate_subdivision(A, S);
    if (!v) throw DomainError("invalid subdivision: " + v.reason);
    if (is_trivial(A, S)) return false;
    if (is_regular(A, S)) {
        std::size_t r = rank(detail::flatness_rows(A, S), A.size());
        return A.size() - r == A.dim() + 2;
    }
    return !find_coarsening(A, S).has_value();
}

inline std::optional<KSplit> detect_k_split(const PointConfiguration& A, const Subdivision& S) {
    if (!validate_subdivision(A, S)) return std::nullopt;
    std::size_t k = S.size();
    if (is_trivial(A, S)) return std::nullopt;
    IndexSet core = S.cells[0];
    for (auto& C : S.cells) core = set_intersection(core, C);
    if (core.empty()) return std::nullopt;
    long d = static_cast<long>(A.dim());
    if (dim_of(A, core) != d - static_cast<long>(k) + 1) return std::nullopt;
    if (!is_interior_face(facets_of(A, iota_set(A.size())), core)) return std::nullopt;
    if (!is_coarsest(A, S)) return std::nullopt;
    return KSplit{S, k, core, affine_hull(A.subset(core))};
}

enum class KSplitWeightVariant { all_rays, omit_last };

struct KSplitFan {
    std::vector<Vec> projection;  // rows; pi(a) = projection * (a - origin)
    Vec origin;
    std::vector<Vec> rays;        // rays[i] spans the intersection of all cells but cell i
};

inline Vec project(const KSplitFan& F, const Vec& a) {
    Vec x = a - F.origin, out;
    for (auto& r : F.projection) out.push_back(dot(r, x));
    return out;
}

inline KSplitFan ksplit_fan(const PointConfiguration& A, const KSplit& K) {
    KSplitFan F;
    F.origin = detail::centroid(A.subset(K.core_face));
    F.projection = K.core_subspace.normal_space();
    const auto& cells = K.subdivision.cells;
    for (std::size_t i = 0; i < K.k; ++i) {
        IndexSet face = iota_set(A.size());
        for (std::size_t j = 0; j < K.k; ++j)
            if (j != i) face = set_intersection(face, cells[j]);
        std::optional<Vec> ray;
        for (auto a : face) {
            Vec p = project(F, A[a]);
            if (!is_zero(p)) {
                ray = primitive_vec(p);
                break;
            }
        }
        if (!ray) throw DomainError("k-split fan has a degenerate ray");
        F.rays.push_back(*ray);
    }
    return F;
}

// Nonnegative coordinates of p in the cone omitting ray j, or nullopt.
inline std::optional<Vec> cone_coordinates(const KSplitFan& F, std::size_t j, const Vec& p) {
    std::size_t k = F.rays.size(), dim = p.size();
    RatMatrix m(dim, k - 1);
    std::size_t c = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (i == j) continue;
        for (std::size_t r = 0; r < dim; ++r) m(r, c) = F.rays[i][r];
        ++c;
    }
    auto x = solve(m, p);
    if (!x) return std::nullopt;
    for (auto& v : *x)
        if (sgn(v) < 0) return std::nullopt;
    Vec full(k);
    c = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (i != j) full[i] = (*x)[c++];
    return full;
}

inline Weight ksplit_weight_variant(const PointConfiguration& A, const KSplit& K, KSplitWeightVariant variant) {
    if (K.k == 1) {
        IndexSet missing = set_difference(iota_set(A.size()), K.subdivision.cells[0]);
        if (missing.size() != 1) throw DomainError("not a 1-split");
        return one_split_weight(A, missing[0]);
    }
    KSplitFan F = ksplit_fan(A, K);
    std::size_t last = variant == KSplitWeightVariant::omit_last ? K.k - 1 : K.k;
    Weight w(A.size());
    for (std::size_t a = 0; a < A.size(); ++a) {
        Vec p = project(F, A[a]);
        std::optional<Vec> lam;
        for (std::size_t j = 0; j < K.k && !lam; ++j)
            if (contains(K.subdivision.cells[j], a)) lam = cone_coordinates(F, j, p);
        for (std::size_t j = 0; j < K.k && !lam; ++j) lam = cone_coordinates(F, j, p);
        if (!lam) throw DomainError("projected point lies in no cone of the fan");
        for (std::size_t i = 0; i < K.k; ++i)
            if (i != last) w[a] += (*lam)[i];
    }
    return w;
}

inline Weight ksplit_weight(const PointConfiguration& A, const KSplit& K) {
    Weight w = ksplit_weight_variant(A, K, KSplitWeightVariant::all_rays);
    if (!induces_subdivision(A, w, K.subdivision))
        throw std::logic_error("k-split weight does not induce the k-split");
    return w;
}

// All k-splits, found from candidate cores and fans of projected directions.
inline std::vector<KSplit> enumerate_ksplits(const PointConfiguration& A, std::size_t k) {
    std::vector<KSplit> out;
    std::size_t d = A.dim(), n = A.size();
    if (k == 0 || k > d + 1) return out;
    if (k == 1) {
        for (auto& o : one_splits(A)) {
            Subdivision S({set_difference(iota_set(n), {o.point_index})});
            if (auto K = detect_k_split(A, S)) out.push_back(*K);
        }
        return out;
    }
    std::vector<IndexSet> boundary = facets_of(A, iota_set(n));
    std::set<IndexSet> cores;
    std::size_t span = d - k + 2;  // points spanning a core
    detail::for_each_subset(n, span, [&](const IndexSet& s) {
        if (dim_of(A, s) != static_cast<long>(span) - 1) return;
        AffineSubspace U = affine_hull(A.subset(s));
        IndexSet F;
        for (std::size_t a = 0; a < n; ++a)
            if (U.contains(A[a])) F.push_back(a);
        if (is_interior_face(boundary, F)) cores.insert(F);
    });
    std::set<Subdivision> seen;
    for (auto& F : cores) {
        KSplit proto;
        proto.k = k;
        proto.core_face = F;
        proto.core_subspace = affine_hull(A.subset(F));
        KSplitFan fan;
        fan.origin = detail::centroid(A.subset(F));
        fan.projection = proto.core_subspace.normal_space();
        std::vector<Vec> dirs;
        for (std::size_t a = 0; a < n; ++a) {
            Vec p = project(fan, A[a]);
            if (!is_zero(p)) dirs.push_back(primitive_vec(p));
        }
        std::sort(dirs.begin(), dirs.end());
        dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
        detail::for_each_subset(dirs.size(), k, [&](const IndexSet& pick) {
            std::vector<Vec> rays;
            for (auto i : pick) rays.push_back(dirs[i]);
            // unique positive dependency among k vectors in dimension k-1
            RatMatrix m(k - 1, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t r = 0; r < k - 1; ++r) m(r, i) = rays[i][r];
            auto ker = kernel_basis(m);
            if (ker.size() != 1) return;
            int s = sgn(ker[0][0]);
            for (auto& c : ker[0])
                if (sgn(c) != s || s == 0) return;
            fan.rays = rays;
            std::vector<IndexSet> cells(k, F);
            for (std::size_t a = 0; a < n; ++a) {
                Vec p = project(fan, A[a]);
                if (is_zero(p)) continue;
                for (std::size_t j = 0; j < k; ++j)
                    if (cone_coordinates(fan, j, p)) cells[j] = set_union(cells[j], {a});
            }
            Subdivision S(cells);
            if (S.size() != k || seen.count(S)) return;
            seen.insert(S);
            if (auto K = detect_k_split(A, S)) out.push_back(*K);
        });
    }
    std::sort(out.begin(), out.end(), [](const KSplit& a, const KSplit& b) { return a.subdivision < b.subdivision; });
    return out;
}

namespace detail {

// Is conv(G) = U cap conv(F), G a face of F? Checked by maximizing a supporting functional.
inline bool meets_in_face(const PointConfiguration& A, const IndexSet& F, const IndexSet& G, const AffineSubspace& U) {
    std::size_t m = F.size(), d = A.dim();
    std::vector<Vec> normals = U.normal_space();
    auto add_membership = [&](LinearProgram& lp) {
        Vec ones(m, Rational(1));
        lp.add(ones, Sense::eq, 1);
        for (auto& nrm : normals) {
            Vec row(m);
            for (std::size_t i = 0; i < m; ++i) row[i] = dot(nrm, A[F[i]]);
            lp.add(row, Sense::eq, dot(nrm, U.basepoint));
        }
    };
    LinearProgram lp(m);
    for (std::size_t i = 0; i < m; ++i) lp.nonneg[i] = true;
    add_membership(lp);
    if (G.empty()) return solve(lp).status == LPStatus::infeasible;
    // affine functional h >= 0 on F, zero exactly on G
    std::vector<Constraint> strict, eqs;
    for (auto a : F) {
        Vec row = homogenize(A[a]);
        if (contains(G, a)) eqs.push_back({row, 0});
        else strict.push_back({row, 0});
    }
    auto h = strict_lp_feasible(strict, {}, eqs, d + 1);
    if (!h) return false;
    for (std::size_t i = 0; i < m; ++i) lp.objective[i] = dot(*h, homogenize(A[F[i]]));
    lp.maximize = true;
    LPResult r = solve(lp);
    return r.status == LPStatus::optimal && sgn(r.value) == 0;
}

}  // namespace detail

// Necessary condition for U to carry a k-split: on every facet, U cuts a face or an l-split core, l <= k.
inline Verdict check_ksplit_subspace_conditions(const PointConfiguration& A, const AffineSubspace& U, std::size_t k) {
    std::size_t d = A.dim();
    if (U.ambient_dim() != d || d - U.dim() != k - 1)
        throw DomainError("subspace codimension differs from k-1");
    std::vector<IndexSet> faces = configuration_faces(A);
    auto is_face = [&](const IndexSet& G) { return G.empty() || std::find(faces.begin(), faces.end(), G) != faces.end(); };
    auto facets = facets_of(A, iota_set(A.size()));
    for (std::size_t f = 0; f < facets.size(); ++f) {
        const IndexSet& F = facets[f];
        IndexSet G;
        for (auto a : F)
            if (U.contains(A[a])) G.push_back(a);
        if (is_face(G) && detail::meets_in_face(A, F, G, U)) continue;
        AffineSubspace affF = affine_hull(A.subset(F));
        auto V = detail::intersect(U, affF);
        if (!V) return Verdict::fail("subspace misses the affine span of facet " + std::to_string(f));
        std::size_t l = affF.dim() - V->dim() + 1;
        if (l > k) return Verdict::fail("facet " + std::to_string(f) + " would need an " + std::to_string(l) + "-split");
        std::vector<Vec> chart;
        for (auto a : F) chart.push_back(detail::chart_coordinates(affF, A[a]));
        PointConfiguration Fc(chart);
        AffineSubspace Vc = detail::chart_subspace(affF, *V);
        bool found = false;
        for (auto& K : enumerate_ksplits(Fc, l))
            if (detail::same_subspace(K.core_subspace, Vc)) found = true;
        if (!found) return Verdict::fail("facet " + std::to_string(f) + " has no " + std::to_string(l) + "-split along the subspace");
    }
    return {};
}

namespace detail {

inline bool two_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    auto connected_without = [&](std::size_t skip) {
        std::vector<std::vector<std::size_t>> adj(n);
        for (auto [a, b] : edges)
            if (a != skip && b != skip) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        std::size_t start = skip == 0 ? 1 : 0;
        if (start >= n) return true;
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto u : adj[v])
                if (!seen[u]) {
                    seen[u] = true;
                    ++count;
                    stack.push_back(u);
                }
        }
        return count == n - (skip < n ? 1 : 0);
    };
    if (n <= 1) return true;
    if (!connected_without(n)) return false;
    if (n == 2) return true;
    for (std::size_t v = 0; v < n; ++v)
        if (!connected_without(v)) return false;
    return true;
}

}  // namespace detail

inline TightSpanShape classify_tight_span(const PointConfiguration& A, const Subdivision& S) {
    DualComplex D = abstract_tight_span(A, S);
    TightSpanShape T;
    T.f_vector = D.f_vector();
    T.num_vertices = D.num_vertices;
    T.edges = D.edges();
    auto maxf = D.maximal_faces();
    for (auto& m : maxf) {
        long dm = 0;
        for (std::size_t i = 0; i < D.faces.size(); ++i)
            if (D.faces[i] == m) dm = D.dims[i];
        std::size_t facets = 0;
        for (std::size_t i = 0; i < D.faces.size(); ++i)
            if (D.dims[i] == dm - 1 && is_subset(D.faces[i], m)) ++facets;
        T.maximal_faces.push_back(m);
        T.maximal_dims.push_back(dm);
        T.max_face_facets.push_back(facets);
    }
    auto simplex_like = [&](std::size_t i) { return T.maximal_faces[i].size() == static_cast<std::size_t>(T.maximal_dims[i]) + 1; };
    std::size_t nm = T.maximal_faces.size();
    bool same_dim = std::all_of(T.maximal_dims.begin(), T.maximal_dims.end(), [&](long x) { return x == T.maximal_dims[0]; });
    IndexSet common = nm ? T.maximal_faces[0] : IndexSet{};
    for (auto& m : T.maximal_faces) common = set_intersection(common, m);
    if (nm == 1) {
        long dm = T.maximal_dims[0];
        std::size_t nv = T.maximal_faces[0].size();
        if (simplex_like(0)) T.kind = ShapeKind::simplex;
        else if (dm == 2) T.kind = ShapeKind::polygon;
        else if (dm == 3 && nv == 5 && T.max_face_facets[0] == 5) T.kind = ShapeKind::pyramid;
        else if (dm == 3 && nv == 5 && T.max_face_facets[0] == 6) T.kind = ShapeKind::bipyramid;
    } else if (nm > 1 && !same_dim) {
        T.kind = ShapeKind::mixed;
    } else if (nm > 1) {
        bool all_simplices = true;
        for (std::size_t i = 0; i < nm; ++i) all_simplices = all_simplices && simplex_like(i);
        long dm = T.maximal_dims[0];
        if (all_simplices && dm == 2) {
            if (common.size() >= 2) T.kind = nm == 2 ? ShapeKind::glued_triangles : ShapeKind::nonplanar_book;
            else if (common.size() == 1) T.kind = ShapeKind::triangle_fan;
        } else if (all_simplices && dm == 3) {
            T.kind = ShapeKind::stacked_tetrahedra;
        }
    }
    return T;
}

// A polygon with m vertices and a triangle sharing an edge.
inline bool is_polygon_with_triangle(const TightSpanShape& T, std::size_t m) {
    if (T.maximal_faces.size() != 2) return false;
    for (int i = 0; i < 2; ++i) {
        const auto& P = T.maximal_faces[i];
        const auto& Q = T.maximal_faces[1 - i];
        if (T.maximal_dims[i] == 2 && P.size() == m && T.maximal_dims[1 - i] == 2 && Q.size() == 3 &&
            set_intersection(P, Q).size() == 2)
            return true;
    }
    return false;
}

inline Verdict necessary_shape_filter(const TightSpanShape& T, std::size_t k) {
    if (T.kind == ShapeKind::polygon && T.maximal_faces[0].size() > 3)
        return Verdict::fail(std::to_string(T.maximal_faces[0].size()) + "-gon");
    if (!detail::two_connected(T.num_vertices, T.edges)) return Verdict::fail("graph is not 2-connected");
    if (T.num_vertices >= 3)
        for (auto dm : T.maximal_dims)
            if (dm <= 1) return Verdict::fail("maximal edge");
    if (k >= 5 && is_polygon_with_triangle(T, k - 1)) return Verdict::fail("polygon glued with a triangle");
    return {};
}

}  // namespace splitspan
