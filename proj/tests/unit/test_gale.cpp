#include <gtest/gtest.h>

#include <splitspan/gale.hpp>
#include <splitspan/secondary.hpp>

#include "../helpers.hpp"

using namespace splitspan;
using namespace testing_util;

namespace {

std::set<IndexSet> faces_of_subdivision(const PointConfiguration& A, const Weight& w) {
    std::set<IndexSet> out;
    for (auto& C : regular_subdivision(A, w).cells)
        for (auto& f : faces_of(A, C))
            if (!f.empty()) out.insert(f);
    return out;
}

std::vector<Vec> extreme_points(const std::vector<Vec>& pts) {
    VPolyhedron v;
    v.vertices = pts;
    v.ambient_dim = pts[0].size();
    std::set<Vec> out;
    for (auto& f : polytope_face_lattice(v).faces)
        if (f.dim == 0) out.insert(pts[f.vertices[0]]);
    return {out.begin(), out.end()};
}

// Vertices of the top-dimensional bounded face of the tight span, first coordinate dropped.
std::vector<Vec> top_face_points(const TightSpan& T, Rational* first = nullptr) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < T.faces.size(); ++i)
        if (T.dims[i] > T.dims[best]) best = i;
    std::vector<Vec> pts;
    for (auto v : T.faces[best]) {
        if (first) *first = T.vertices[v][0];
        pts.emplace_back(T.vertices[v].begin() + 1, T.vertices[v].end());
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool combinatorially_equal(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    auto pa = polytope_facets(VPolyhedron{a, {}, a[0].size()});
    auto pb = polytope_facets(VPolyhedron{b, {}, b[0].size()});
    return incidence_isomorphic(pa.first, pa.second, pb.first, pb.second);
}

std::vector<Vec> cross_polytope(std::size_t n) {
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < n; ++i)
        for (int s : {1, -1}) {
            Vec p(n);
            p[i] = s;
            pts.push_back(p);
        }
    return pts;
}

std::vector<Vec> prism() {
    return {V({0, 0, 0}), V({4, 0, 0}), V({0, 4, 0}), V({0, 0, 4}), V({4, 0, 4}), V({0, 4, 4})};
}

std::vector<Vec> sorted(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(GaleDual, KernelProperty) {
    std::mt19937 rng(5);
    std::vector<PointConfiguration> cs = {square_with_center(), hexagon_with_center(), cube3()};
    for (int i = 0; i < 6; ++i) cs.push_back(random_configuration(rng, 6, 2 + i % 2));
    for (auto& A : cs) {
        auto G = gale_dual(A);
        EXPECT_EQ(G.dim, A.size() - A.dim() - 1);
        for (std::size_t j = 0; j <= A.dim(); ++j)
            for (std::size_t c = 0; c < G.dim; ++c) {
                Rational s = 0;
                for (std::size_t i = 0; i < A.size(); ++i) s += homogenize(A[i])[j] * G.vectors[i][c];
                EXPECT_EQ(s, 0);
            }
        EXPECT_EQ(rank(G.vectors, G.dim), G.dim);
    }
    EXPECT_EQ(gale_dual(square_with_center()).vectors.size(), 5u);
    EXPECT_EQ(gale_dual(square_with_center()).dim, 2u);
}

TEST(GaleDual, SimplexAndCopies) {
    auto S = gale_dual(PointConfiguration({V({0, 0}), V({1, 0}), V({0, 1})}));
    EXPECT_EQ(S.dim, 0u);
    // five copies of a point: five vectors in dimension four, any four independent
    PointConfiguration C(std::vector<Vec>(5, Vec{}));
    auto G = gale_dual(C);
    EXPECT_EQ(G.dim, 4u);
    EXPECT_EQ(rank(G.vectors, 4), 4u);
    for (std::size_t skip = 0; skip < 5; ++skip) {
        std::vector<Vec> rest;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != skip) rest.push_back(G.vectors[i]);
        EXPECT_EQ(rank(rest, 4), 4u);
    }
}

TEST(ChamberPoint, AffineInvariance) {
    auto A = hexagon_with_center();
    auto G = gale_dual(A);
    Weight w = V({0, 0, 1, 1, 0, 0, 0}), wbar = V({0, 0, 1, 1, 0, 0, 1});
    Weight aff(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) aff[i] = 3 - 2 * A[i][0] + 5 * A[i][1];
    EXPECT_TRUE(is_zero(weight_to_chamber_point(A, G, aff)));
    EXPECT_EQ(weight_to_chamber_point(A, G, w + aff), weight_to_chamber_point(A, G, w));
    auto C = square_with_center();
    auto GC = gale_dual(C);
    EXPECT_NE(weight_to_chamber_point(C, GC, V({0, 0, 1, 1, 0})), weight_to_chamber_point(C, GC, V({0, 0, 1, 1, 1})));
    EXPECT_NE(weight_to_chamber_point(A, G, w), weight_to_chamber_point(A, G, wbar));
}

TEST(ChamberFaceTest, HexagonExample) {
    auto A = hexagon_with_center();
    auto G = gale_dual(A);
    Weight w = V({0, 0, 1, 1, 0, 0, 0}), wbar = V({0, 0, 1, 1, 0, 0, 1});
    EXPECT_TRUE(chamber_face_test(A, G, w, S1({1, 2, 5, 6, 7})));
    EXPECT_FALSE(chamber_face_test(A, G, wbar, S1({1, 2, 5, 6, 7})));
    EXPECT_TRUE(chamber_face_test(A, G, wbar, S1({1, 2, 5, 6})));
    Weight zero(A.size());
    EXPECT_TRUE(chamber_face_test(A, G, zero, iota_set(A.size())));
}

TEST(ChamberFaceTest, MatchesRegularSubdivision) {
    std::mt19937 rng(21);
    for (int it = 0; it < 10; ++it) {
        std::size_t d = 2 + it % 2;
        auto A = random_configuration(rng, d + 3, d, 2);
        auto w = random_weight(rng, A.size());
        auto G = gale_dual(A);
        auto faces = faces_of_subdivision(A, w);
        for (unsigned mask = 1; mask < (1u << A.size()); ++mask) {
            IndexSet F;
            for (std::size_t i = 0; i < A.size(); ++i)
                if (mask >> i & 1) F.push_back(i);
            EXPECT_EQ(chamber_face_test(A, G, w, F), faces.count(F) > 0) << it << " " << mask;
        }
    }
}

TEST(SameSecondary, AlreadyBalanced) {
    for (auto A : {octahedron(), unit_square(), cube3()}) {
        auto r = polytope_with_same_secondary(A);
        EXPECT_TRUE(r.duplicated.empty());
        EXPECT_EQ(r.polytope.points, A.points);
    }
}

TEST(SameSecondary, CopiesGiveCrossPolytope) {
    for (std::size_t n : {2u, 3u, 4u}) {
        PointConfiguration C(std::vector<Vec>(n, Vec{}));
        auto r = polytope_with_same_secondary(C);
        EXPECT_EQ(r.duplicated.size(), n);
        EXPECT_EQ(r.polytope.size(), 2 * n);
        EXPECT_EQ(r.polytope.dim(), n);
        EXPECT_EQ(extreme_points(r.polytope.points).size(), 2 * n);
        EXPECT_TRUE(combinatorially_equal(r.polytope.points, cross_polytope(n)));
    }
}

TEST(SameSecondary, SquareWithCenter) {
    auto A = square_with_center();
    auto r = polytope_with_same_secondary(A);
    auto& B = r.polytope;
    EXPECT_EQ(r.duplicated, IndexSet{4});
    EXPECT_LE(B.size(), 10u);
    EXPECT_EQ(extreme_points(B.points).size(), B.size());  // in convex position
    auto P = secondary_polytope(A), Q = secondary_polytope(B);
    EXPECT_EQ(P.dim, Q.dim);
    std::vector<IndexSet> fp, fq;
    for (auto& f : P.facets) fp.push_back(f.tight_vertices);
    for (auto& f : Q.facets) fq.push_back(f.tight_vertices);
    EXPECT_TRUE(incidence_isomorphic(P.vertices.size(), fp, Q.vertices.size(), fq));
    // face membership survives: copies weighted 0 and placed in F
    auto G = gale_dual(A), GB = gale_dual(B);
    std::mt19937 rng(2);
    for (int it = 0; it < 5; ++it) {
        auto w = random_weight(rng, A.size());
        Weight wb = w;
        wb.resize(B.size(), 0);
        for (unsigned mask = 1; mask < 32; ++mask) {
            IndexSet F;
            for (std::size_t i = 0; i < 5; ++i)
                if (mask >> i & 1) F.push_back(i);
            IndexSet FB = F;
            for (std::size_t i = 5; i < B.size(); ++i) FB.push_back(i);
            EXPECT_EQ(chamber_face_test(A, G, w, F), chamber_face_test(B, GB, wb, FB));
        }
    }
}

TEST(SameSecondary, RandomSecondaryIsomorphic) {
    std::mt19937 rng(17);
    int checked = 0;
    for (int it = 0; it < 10 && checked < 3; ++it) {
        auto A = random_configuration(rng, 5, 2, 2);
        auto r = polytope_with_same_secondary(A);
        if (r.polytope.size() > 8) continue;
        ++checked;
        SizeGuards g;
        g.max_dim = 8;
        auto P = secondary_polytope(A), Q = secondary_polytope(r.polytope, g);
        std::vector<IndexSet> fp, fq;
        for (auto& f : P.facets) fp.push_back(f.tight_vertices);
        for (auto& f : Q.facets) fq.push_back(f.tight_vertices);
        EXPECT_TRUE(incidence_isomorphic(P.vertices.size(), fp, Q.vertices.size(), fq));
    }
    EXPECT_GT(checked, 0);
}

TEST(PcToPolytope, FanTriangulation) {
    auto A = square_with_center();
    Weight w = VS({"-1/2", "-1/2", "-1/2", "-1/2", "-1"});
    auto L = pc_to_polytope_tightspan(A, w);
    EXPECT_EQ(L.shift, 0);
    EXPECT_EQ(L.polytope.size(), 10u);
    EXPECT_EQ(extreme_points(L.polytope.points).size(), 10u);
    auto S = regular_subdivision(L.polytope, L.weight);
    ASSERT_EQ(S.size(), 4u);
    std::vector<Vec> tri_prism = prism();
    for (auto& C : S.cells) {
        ASSERT_EQ(C.size(), 6u);
        EXPECT_TRUE(combinatorially_equal(L.polytope.subset(C), tri_prism));
    }
}

TEST(PcToPolytope, TightSpanTransfers) {
    std::mt19937 rng(31);
    std::vector<std::pair<PointConfiguration, Weight>> cases = {
        {hexagon_with_center(), V({0, 0, 1, 1, 0, 0, 0})},
        {hexagon_with_center(), V({0, 0, 1, 1, 0, 0, 1})},
        {square_with_center(), V({0, 0, 0, 0, 1})},
    };
    for (int i = 0; i < 6; ++i) {
        auto A = random_configuration(rng, 6, 2, 2);
        cases.emplace_back(A, random_weight(rng, A.size()));
    }
    for (auto& [A, w] : cases) {
        auto L = pc_to_polytope_tightspan(A, w);
        Weight ws = w;
        for (auto& x : ws) x -= L.shift;
        auto T = tight_span(A, ws);
        auto TP = tight_span(L.polytope, L.weight);
        std::vector<Vec> expect;
        for (auto v : T.vertices) {
            v.push_back(0);
            expect.push_back(v);
        }
        EXPECT_EQ(sorted(TP.vertices), sorted(expect));
        EXPECT_EQ(TP.f_vector(), T.f_vector());
        // dropped points can turn a one-point split into the trivial subdivision
        if (L.kept.size() == A.size())
            EXPECT_EQ(is_coarsest(L.polytope, regular_subdivision(L.polytope, L.weight)),
                      is_coarsest(A, regular_subdivision(A, w)));
    }
    // hexagon: a unit segment; height coordinate first here
    auto L = pc_to_polytope_tightspan(hexagon_with_center(), V({0, 0, 1, 1, 0, 0, 0}));
    auto TP = tight_span(L.polytope, L.weight);
    ASSERT_EQ(TP.vertices.size(), 2u);
    auto diff = TP.vertices[0] - TP.vertices[1];
    EXPECT_TRUE(diff == V({1, -1, 0, 0}) || diff == V({-1, 1, 0, 0}));
}

TEST(PcToPolytope, SplitsStaySplits) {
    for (auto A : {square_with_center(), hexagon_with_center(), cube3()}) {
        for (auto& t : two_splits(A)) {
            auto L = pc_to_polytope_tightspan(A, split_weight(A, t));
            auto S = regular_subdivision(L.polytope, L.weight);
            EXPECT_EQ(S.size(), 2u);
            EXPECT_TRUE(is_coarsest(L.polytope, S));
        }
    }
    for (auto& K : enumerate_ksplits(cube3(), 3)) {
        auto L = pc_to_polytope_tightspan(cube3(), ksplit_weight(cube3(), K));
        EXPECT_TRUE(is_coarsest(L.polytope, regular_subdivision(L.polytope, L.weight)));
    }
}

TEST(PcToPolytope, DropsUnusedAndDuplicatePoints) {
    PointConfiguration A({V({0, 0}), V({2, 0}), V({0, 2}), V({1, 0}), V({1, 1}), V({2, 0})});
    Weight w = V({0, 0, 0, 0, 5, -1});
    auto L = pc_to_polytope_tightspan(A, w);
    // (1,0) sits on an edge, (1,1) is lifted away, the lower copy of (2,0) wins
    EXPECT_EQ(L.kept, (IndexSet{0, 2, 5}));
    EXPECT_EQ(L.polytope.size(), 6u);
    EXPECT_EQ(L.shift, 1);
}

TEST(PolytopeAsTightSpan, RoundTrips) {
    std::mt19937 rng(44);
    std::vector<std::vector<Vec>> cases = {
        {V({-1}), V({1})},
        {V({0, 0}), V({2, 0}), V({0, 2}), V({2, 2})},
        {V({0, 0}), V({3, 0}), V({0, 3}), V({1, 1})},  // interior point is ignored
    };
    for (int i = 0; i < 3; ++i) {
        std::vector<Vec> pts;
        for (int j = 0; j < 8; ++j)
            pts.push_back(Vec{random_rational(rng, 4, 1), random_rational(rng, 4, 1), random_rational(rng, 4, 1)});
        if (affine_dim(pts) == 3) cases.push_back(pts);
    }
    ASSERT_GE(cases.size(), 4u);
    for (auto& pts : cases) {
        auto R = polytope_as_tightspan(VPolyhedron{pts, {}, pts[0].size()});
        EXPECT_EQ(R.config.size(), R.weight.size());
        EXPECT_EQ(R.config.points.back(), Vec(pts[0].size()));
        auto T = tight_span(R.config, R.weight);
        Rational first = -1;
        auto top = top_face_points(T, &first);
        EXPECT_EQ(first, 0);
        std::vector<Vec> expect;
        for (auto& p : extreme_points(pts)) expect.push_back(p - R.translation);
        EXPECT_EQ(top, sorted(expect));
        if (pts.size() > 2) EXPECT_TRUE(combinatorially_equal(top, extreme_points(pts)));
    }
    EXPECT_THROW(polytope_as_tightspan(VPolyhedron{{V({0, 0}), V({1, 1})}, {}, 2}), DomainError);
}

TEST(PolytopeAsTightSpan, PrismNeedsNonCoarsest) {
    auto P = prism();
    auto R = polytope_as_tightspan(VPolyhedron{P, {}, 3});
    EXPECT_EQ(R.config.size(), 6u);  // five facets plus the origin
    auto L = pc_to_polytope_tightspan(R.config, R.weight);
    EXPECT_EQ(L.polytope.size(), 12u);
    EXPECT_EQ(L.polytope.dim(), 4u);
    auto S = regular_subdivision(L.polytope, L.weight);
    EXPECT_FALSE(is_coarsest(L.polytope, S));
    EXPECT_FALSE(is_coarsest(R.config, regular_subdivision(R.config, R.weight)));
    auto top = top_face_points(tight_span(L.polytope, L.weight));
    for (auto& p : top) {
        EXPECT_EQ(p.back(), 0);
        p.pop_back();
    }
    EXPECT_TRUE(combinatorially_equal(top, P));
}
