#pragma once

#include "config.hpp"

namespace splitspan {

struct OneSplit {
    std::size_t point_index;
    bool operator==(const OneSplit&) const = default;
};

// h(x) = normal.x - offset; side_plus = {h >= 0}, side_minus = {h <= 0}
struct TwoSplit {
    Vec normal;
    Rational offset;
    IndexSet side_plus;
    IndexSet side_minus;

    Rational eval(const Vec& x) const { return dot(normal, x) - offset; }
    Subdivision subdivision() const { return Subdivision({side_plus, side_minus}); }
    bool operator==(const TwoSplit& o) const { return normal == o.normal && offset == o.offset; }
};

struct SplitDecomposition {
    std::vector<std::pair<std::size_t, Rational>> lambda_one;   // point index, coefficient
    std::vector<std::pair<TwoSplit, Rational>> lambda_two;
    Weight residual;
    bool coherent = false;
};

// Convex combination of the points of C equal to p (as coefficients), if any.
inline bool in_convex_hull(const PointConfiguration& A, const IndexSet& C, const Vec& p) {
    std::size_t m = C.size(), d = A.dim();
    if (m == 0) return false;
    std::vector<Constraint> weak, eqs;
    for (std::size_t i = 0; i < m; ++i) {
        Vec e(m);
        e[i] = 1;
        weak.push_back({e, 0});
    }
    for (std::size_t j = 0; j <= d; ++j) {
        Vec row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = j == 0 ? Rational(1) : A[C[i]][j - 1];
        eqs.push_back({row, j == 0 ? Rational(1) : p[j - 1]});
    }
    return strict_lp_feasible({}, weak, eqs, m).has_value();
}

inline std::vector<OneSplit> one_splits(const PointConfiguration& A) {
    std::vector<OneSplit> out;
    for (std::size_t p = 0; p < A.size(); ++p) {
        IndexSet rest = set_difference(iota_set(A.size()), {p});
        if (in_convex_hull(A, rest, A[p])) out.push_back({p});
    }
    return out;
}

inline Weight one_split_weight(const PointConfiguration& A, std::size_t p) {
    if (p >= A.size() || !in_convex_hull(A, set_difference(iota_set(A.size()), {p}), A[p]))
        throw DomainError("point " + std::to_string(p + 1) + " does not define a 1-split");
    Weight w(A.size());
    w[p] = 1;
    return w;
}

namespace detail {

// Distinct vertex coordinates of conv A and its edges as coordinate pairs.
inline std::vector<std::pair<Vec, Vec>> hull_edges(const PointConfiguration& A) {
    VPolyhedron all;
    all.ambient_dim = A.dim();
    all.vertices = A.points;
    VtoHResult r = dd_convert_VtoH_incidence(all);
    std::vector<IndexSet> inc(A.size());
    for (std::size_t f = 0; f < r.facet_vertices.size(); ++f)
        for (auto i : r.facet_vertices[f]) inc[i].push_back(f);
    std::set<Vec> verts;
    for (std::size_t i = 0; i < A.size(); ++i) {
        bool vertex = true;
        for (std::size_t j = 0; j < A.size() && vertex; ++j)
            if (A[j] != A[i] && is_subset(inc[i], inc[j])) vertex = false;
        if (vertex) verts.insert(A[i]);
    }
    VPolyhedron v;
    v.ambient_dim = A.dim();
    v.vertices.assign(verts.begin(), verts.end());
    std::vector<std::pair<Vec, Vec>> edges;
    for (auto [i, j] : polytope_edges(v)) edges.emplace_back(v.vertices[i], v.vertices[j]);
    return edges;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const IndexSet&)>& f) {
    IndexSet s(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(s);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            s[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

// Canonical (c0, c) with c0 + c.x = 0 on the affine hull of d affinely independent points.
inline std::optional<Vec> spanned_hyperplane(const PointConfiguration& A, const IndexSet& s) {
    std::vector<Vec> rows;
    for (auto i : s) rows.push_back(homogenize(A[i]));
    auto k = kernel_basis(rows, A.dim() + 1);
    if (k.size() != 1) return std::nullopt;
    Vec h = primitive_vec(k[0]);
    for (std::size_t j = 1; j < h.size(); ++j)
        if (sgn(h[j]) != 0) {
            if (sgn(h[j]) < 0)
                for (auto& x : h) x = -x;
            break;
        }
    return h;
}

}  // namespace detail

inline TwoSplit make_two_split(const PointConfiguration& A, const Vec& normal, const Rational& offset) {
    TwoSplit s{normal, offset, {}, {}};
    for (std::size_t i = 0; i < A.size(); ++i) {
        int g = sgn(s.eval(A[i]));
        if (g >= 0) s.side_plus.push_back(i);
        if (g <= 0) s.side_minus.push_back(i);
    }
    return s;
}

// Hyperplane cuts conv A into two pieces whose vertices are configuration points.
inline bool is_split_hyperplane(const PointConfiguration& A, const Vec& normal, const Rational& offset,
                                const std::vector<std::pair<Vec, Vec>>& edges) {
    bool pos = false, neg = false;
    for (auto& p : A.points) {
        int g = sgn(dot(normal, p) - offset);
        pos |= g > 0;
        neg |= g < 0;
    }
    if (!pos || !neg) return false;
    std::set<Vec> pts(A.points.begin(), A.points.end());
    for (auto& [p, q] : edges) {
        Rational hp = dot(normal, p) - offset, hq = dot(normal, q) - offset;
        if (sgn(hp) * sgn(hq) >= 0) continue;
        Rational t = hp / (hp - hq);
        Vec x = p + t * (q - p);
        if (!pts.count(x)) return false;
    }
    return true;
}

inline std::vector<TwoSplit> two_splits(const PointConfiguration& A) {
    std::size_t d = A.dim();
    auto edges = detail::hull_edges(A);
    std::set<Vec> seen;
    std::vector<TwoSplit> out;
    // distinct coordinates suffice to span every candidate hyperplane
    std::vector<std::size_t> reps;
    {
        std::set<Vec> c;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (c.insert(A[i]).second) reps.push_back(i);
    }
    detail::for_each_subset(reps.size(), d, [&](const IndexSet& s) {
        IndexSet pts;
        for (auto i : s) pts.push_back(reps[i]);
        auto h = detail::spanned_hyperplane(A, pts);
        if (!h || !seen.insert(*h).second) return;
        Vec normal(h->begin() + 1, h->end());
        Rational offset = -(*h)[0];
        if (is_split_hyperplane(A, normal, offset, edges)) out.push_back(make_two_split(A, normal, offset));
    });
    std::sort(out.begin(), out.end(), [](const TwoSplit& a, const TwoSplit& b) {
        return std::tie(a.side_plus, a.side_minus) < std::tie(b.side_plus, b.side_minus);
    });
    return out;
}

// Split of A with the same hyperplane as a split of a subconfiguration with the same hull.
inline TwoSplit inherit_split(const PointConfiguration& A_sub, const PointConfiguration& A, const TwoSplit& S) {
    if (A_sub.dim() != A.dim()) throw DomainError("configurations of different dimension");
    std::vector<Vec> pool = A.points;
    for (auto& p : A_sub.points) {
        auto it = std::find(pool.begin(), pool.end(), p);
        if (it == pool.end()) throw DomainError("subconfiguration is not contained in the configuration");
        pool.erase(it);
    }
    IndexSet all_sub = iota_set(A_sub.size());
    for (auto& p : A.points)
        if (!in_convex_hull(A_sub, all_sub, p)) throw DomainError("convex hulls differ");
    if (!is_split_hyperplane(A_sub, S.normal, S.offset, detail::hull_edges(A_sub)))
        throw DomainError("not a split of the subconfiguration");
    return make_two_split(A, S.normal, S.offset);
}

inline Weight split_weight(const PointConfiguration& A, const TwoSplit& S) {
    Weight w(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        Rational h = S.eval(A[i]);
        w[i] = sgn(h) > 0 ? h : Rational(0);
    }
    return w;
}

inline bool refines_split(const Subdivision& S, const TwoSplit& T) {
    for (auto& c : S.cells)
        if (!is_subset(c, T.side_plus) && !is_subset(c, T.side_minus)) return false;
    return true;
}

// Lowest height over p of the lower hull of A without p.
inline std::optional<Rational> hull_height_without(const PointConfiguration& A, const Weight& w, std::size_t p) {
    IndexSet rest = set_difference(iota_set(A.size()), {p});
    std::size_t m = rest.size(), d = A.dim();
    LinearProgram lp(m);
    lp.maximize = false;
    for (std::size_t i = 0; i < m; ++i) {
        lp.nonneg[i] = true;
        lp.objective[i] = w[rest[i]];
    }
    for (std::size_t j = 0; j <= d; ++j) {
        Vec row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = j == 0 ? Rational(1) : A[rest[i]][j - 1];
        lp.add(row, Sense::eq, j == 0 ? Rational(1) : A[p][j - 1]);
    }
    LPResult r = solve(lp);
    if (r.status != LPStatus::optimal) return std::nullopt;
    return r.value;
}

// Bending of w across the walls of Sigma_w lying on the split hyperplane; min over walls.
inline std::optional<Rational> split_coefficient(const PointConfiguration& A, const Weight& w, const Subdivision& S,
                                                 const TwoSplit& T) {
    if (!refines_split(S, T)) return std::nullopt;
    std::optional<Rational> lambda;
    long d = static_cast<long>(A.dim());
    for (auto& c1 : S.cells) {
        if (!is_subset(c1, T.side_plus)) continue;
        for (auto& c2 : S.cells) {
            if (!is_subset(c2, T.side_minus) || c1 == c2) continue;
            IndexSet wall = set_intersection(c1, c2);
            if (wall.empty() || dim_of(A, wall) != d - 1) continue;
            auto cp = affine_interpolant(A, c1, w), cm = affine_interpolant(A, c2, w);
            std::size_t q = SIZE_MAX;
            for (auto i : c2)
                if (sgn(T.eval(A[i])) < 0) q = i;
            Rational l = (eval_affine(*cm, A[q]) - eval_affine(*cp, A[q])) / (-T.eval(A[q]));
            if (!lambda || l < *lambda) lambda = l;
        }
    }
    return lambda;
}

inline bool is_split_prime(const PointConfiguration& A, const Weight& w, const std::vector<TwoSplit>& splits,
                           const std::vector<OneSplit>& ones) {
    Subdivision S = regular_subdivision(A, w);
    IndexSet used = S.used_points();
    for (auto& o : ones)
        if (!contains(used, o.point_index)) return false;
    for (auto& t : splits)
        if (refines_split(S, t)) return false;
    return true;
}

inline bool is_split_prime(const PointConfiguration& A, const Weight& w) {
    return is_split_prime(A, w, two_splits(A), one_splits(A));
}

inline SplitDecomposition split_decomposition(const PointConfiguration& A, const Weight& w,
                                              const std::vector<TwoSplit>& splits, const std::vector<OneSplit>& ones) {
    SplitDecomposition D;
    Subdivision S = regular_subdivision(A, w);
    Weight rest = w;
    for (auto& t : splits) {
        auto l = split_coefficient(A, w, S, t);
        if (!l || sgn(*l) <= 0) continue;
        D.lambda_two.emplace_back(t, *l);
        rest = rest - *l * split_weight(A, t);
    }
    Subdivision S2 = regular_subdivision(A, rest);
    IndexSet used = S2.used_points();
    Weight lowered = rest;
    for (auto& o : ones) {
        if (contains(used, o.point_index)) continue;
        auto h = hull_height_without(A, rest, o.point_index);
        if (!h) continue;
        Rational l = rest[o.point_index] - *h;
        if (sgn(l) <= 0) continue;
        D.lambda_one.emplace_back(o.point_index, l);
        lowered[o.point_index] -= l;
    }
    D.residual = lowered;
    // coherence of the running sums
    bool ok = true;
    Weight running = D.residual;
    for (auto& [p, l] : D.lambda_one) {
        Weight part = l * one_split_weight(A, p);
        ok = ok && coherence_check(A, running, part);
        running = running + part;
    }
    for (auto& [t, l] : D.lambda_two) {
        Weight part = l * split_weight(A, t);
        ok = ok && coherence_check(A, running, part);
        running = running + part;
    }
    if (running != w) throw std::logic_error("split decomposition does not reconstruct the weight");
    D.coherent = ok;
    return D;
}

inline SplitDecomposition split_decomposition(const PointConfiguration& A, const Weight& w) {
    return split_decomposition(A, w, two_splits(A), one_splits(A));
}

}  // namespace splitspan
