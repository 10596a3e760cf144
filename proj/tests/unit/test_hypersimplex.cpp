#include <gtest/gtest.h>

#include <splitspan/hypersimplex.hpp>

#include "../helpers.hpp"

using namespace splitspan;
using namespace testing_util;

namespace {

// Edges of conv(f) all parallel to some e_i - e_j.
bool edge_criterion(const SetFamily& f, std::size_t n) {
    if (f.size() == 1) return true;
    VPolyhedron v;
    v.ambient_dim = n;
    for (auto& S : f) {
        Vec p(n);
        for (auto i : S) p[i] = 1;
        v.vertices.push_back(p);
    }
    for (auto [i, j] : polytope_edges(v)) {
        IndexSet sym = set_union(set_difference(f[i], f[j]), set_difference(f[j], f[i]));
        if (sym.size() != 2) return false;
    }
    return true;
}

TripartitionSplit T(std::array<IndexSet, 3> parts, std::array<std::size_t, 3> mus, int o = 1) {
    TripartitionSplit t;
    t.parts = parts;
    t.mus = mus;
    t.orientation = o;
    return t;
}

// Ordered count of admissible mu, by brute force.
long mu_brute(std::size_t a, std::size_t b, std::size_t k, std::size_t n) {
    long c = 0;
    std::size_t g = n - a - b;
    for (std::size_t m1 = 1; m1 < a; ++m1)
        for (std::size_t m2 = 1; m2 < b; ++m2)
            if (m1 + m2 < k && k - m1 - m2 < g) ++c;
    return c;
}

}  // namespace

TEST(HypersimplexConfig, Shapes) {
    auto T13 = hypersimplex_config(1, 3);
    EXPECT_EQ(T13.size(), 3u);
    EXPECT_EQ(T13.dim(), 2u);
    auto O = hypersimplex_config(2, 4);
    EXPECT_EQ(O.size(), 6u);
    VPolyhedron v{O.points, {}, 3};
    auto oct = polytope_facets(VPolyhedron{octahedron().points, {}, 3});
    auto got = polytope_facets(v);
    EXPECT_TRUE(incidence_isomorphic(got.first, got.second, oct.first, oct.second));
    auto H = hypersimplex_config(3, 6);
    EXPECT_EQ(H.size(), 20u);
    EXPECT_EQ(H.dim(), 5u);
    EXPECT_EQ(H.labels[0], "1,2,3");
    EXPECT_THROW(hypersimplex_config(0, 3), DomainError);
    EXPECT_THROW(hypersimplex_config(3, 3), DomainError);
}

TEST(HypersimplexTwoSplits, Counts) {
    EXPECT_EQ(hypersimplex_two_splits(2, 4).size(), 3u);
    EXPECT_EQ(hypersimplex_two_splits(2, 5).size(), 10u);
    for (std::size_t n = 2; n <= 7; ++n) EXPECT_TRUE(hypersimplex_two_splits(1, n).empty());
}

TEST(HypersimplexTwoSplits, AgreeWithGenericEngine) {
    for (std::size_t n = 4; n <= 6; ++n)
        for (std::size_t k = 2; k + 2 <= n; ++k) {
            auto H = hypersimplex(k, n);
            auto A = hypersimplex_config(k, n);
            std::set<Subdivision> sym, gen;
            for (auto& s : hypersimplex_two_splits(k, n)) {
                auto S = ab_split_cells(s, H);
                EXPECT_TRUE(is_matroid_subdivision(H, S));
                sym.insert(S);
            }
            for (auto& t : two_splits(A)) gen.insert(t.subdivision());
            EXPECT_EQ(sym, gen) << k << " " << n;
            EXPECT_EQ(sym.size(), hypersimplex_two_splits(k, n).size());
        }
}

TEST(ThreeSplitCells, Delta36) {
    auto t = T({S1({1, 2}), S1({3, 4}), S1({5, 6})}, {1, 1, 1});
    auto A = hypersimplex_config(3, 6);
    auto H = hypersimplex(3, 6);
    auto S = three_split_cells(t, 3, 6);
    EXPECT_EQ(S.size(), 3u);
    auto core = three_split_core(t, 3, 6);
    EXPECT_EQ(core.size(), 8u);
    EXPECT_TRUE(validate_subdivision(A, S));
    auto K = detect_k_split(A, S);
    ASSERT_TRUE(K);
    EXPECT_EQ(K->k, 3u);
    EXPECT_EQ(K->core_face, core);
    auto t2 = t;
    t2.orientation = 2;
    auto S2 = three_split_cells(t2, 3, 6);
    EXPECT_NE(S, S2);
    EXPECT_EQ(three_split_core(t2, 3, 6), core);
    auto K2 = detect_k_split(A, S2);
    ASSERT_TRUE(K2);
    EXPECT_EQ(K2->core_face, core);
    for (auto* s : {&S, &S2}) {
        EXPECT_TRUE(is_matroid_subdivision(H, *s));
        EXPECT_TRUE(is_regular(A, *s));
        EXPECT_TRUE(is_coarsest(A, *s));
    }
    EXPECT_TRUE(induces_subdivision(A, ksplit_weight(A, *K), S));
}

TEST(ThreeSplitCells, Delta48) {
    auto t = T({S1({1, 2, 3}), S1({4, 5, 6}), S1({7, 8})}, {2, 1, 1});
    auto A = hypersimplex_config(4, 8);
    auto S = three_split_cells(t, 4, 8);
    EXPECT_TRUE(validate_subdivision(A, S));
    auto K = detect_k_split(A, S);
    ASSERT_TRUE(K);
    EXPECT_EQ(K->k, 3u);
    EXPECT_TRUE(is_matroid_subdivision(hypersimplex(4, 8), S));
    EXPECT_TRUE(induces_subdivision(A, ksplit_weight(A, *K), S));
}

TEST(ThreeSplitCells, RejectsBadInput) {
    EXPECT_THROW(three_split_cells(T({S1({1, 2}), S1({3, 4}), S1({5, 6})}, {2, 1, 1}), 4, 6), DomainError);
    EXPECT_THROW(three_split_cells(T({S1({1, 2}), S1({3, 4}), S1({5})}, {1, 1, 1}), 3, 6), DomainError);
    EXPECT_THROW(three_split_cells(T({S1({1, 2}), S1({3, 4}), S1({5, 6})}, {1, 1, 1}), 4, 6), DomainError);
}

TEST(ThreeSplitCells, AllSmallCasesCertified) {
    for (auto [k, n] : {std::pair<std::size_t, std::size_t>{3, 6}, {3, 7}, {4, 7}}) {
        auto A = hypersimplex_config(k, n);
        auto H = hypersimplex(k, n);
        std::set<Subdivision> distinct;
        auto all = enumerate_three_splits(k, n);
        for (std::size_t i = 0; i < all.size(); ++i) {
            auto S = three_split_cells(all[i], k, n);
            distinct.insert(S);
            if (i % 7 != 0) continue;  // the full certificate on a sample
            EXPECT_TRUE(validate_subdivision(A, S));
            auto K = detect_k_split(A, S);
            ASSERT_TRUE(K);
            EXPECT_EQ(K->k, 3u);
            EXPECT_EQ(K->core_face, three_split_core(all[i], k, n));
            EXPECT_TRUE(is_matroid_subdivision(H, S));
        }
        EXPECT_EQ(distinct.size(), all.size());
    }
}

TEST(MuCount, Formulas) {
    EXPECT_EQ(mu_count(2, 2, 3, 6), 1);
    for (std::size_t n = 6; n <= 10; ++n)
        for (std::size_t a = 2; a + 4 <= n; ++a)
            for (std::size_t b = 2; a + b + 2 <= n; ++b) {
                EXPECT_EQ(mu_count(a, b, 3, n), 1);
                EXPECT_EQ(mu_count(a, b, 2, n), 0);
                EXPECT_EQ(mu_count(a, b, 4, n), mu_count_k4(a, b, n));
                EXPECT_EQ(mu_count_literal(a, b, 4, n), mu_count_k4(a, b, n));
                for (std::size_t k = 1; k < n; ++k) EXPECT_EQ(mu_count(a, b, k, n), mu_brute(a, b, k, n));
            }
    EXPECT_EQ(mu_count(2, 2, 4, 7), 1);
    EXPECT_EQ(mu_count(3, 3, 4, 9), 3);
    // the unclipped sum drifts once a term goes negative
    EXPECT_EQ(mu_count_literal(2, 2, 5, 6), -1);
    EXPECT_EQ(mu_count(2, 2, 5, 6), 0);
    EXPECT_THROW(mu_count(1, 2, 3, 6), DomainError);
}

TEST(CountThreeSplits, Values) {
    EXPECT_EQ(count_three_splits(3, 7), 210);
    EXPECT_EQ(count_three_splits(3, 6), 30);
    for (std::size_t n = 3; n <= 9; ++n) EXPECT_EQ(count_three_splits(2, n), 0);
    for (std::size_t n = 3; n <= 9; ++n)
        for (std::size_t k = 1; k < n; ++k)
            EXPECT_EQ(count_three_splits(k, n), Integer(enumerate_three_splits(k, n).size())) << k << " " << n;
}

TEST(MatroidFamily, Basics) {
    auto H = hypersimplex(2, 4);
    EXPECT_TRUE(is_matroid_family(H.vertex_sets));
    EXPECT_FALSE(is_matroid_family({S1({1, 2}), S1({3, 4})}));
    EXPECT_TRUE(is_matroid_family({S1({1, 2})}));
    EXPECT_THROW(is_matroid_family({}), DomainError);
    auto t = T({S1({1, 2}), S1({3, 4}), S1({5, 6})}, {1, 1, 1});
    auto H6 = hypersimplex(3, 6);
    for (auto& C : three_split_cells(t, 3, 6).cells) EXPECT_TRUE(is_matroid_family(cell_family(H6, C)));
}

TEST(MatroidFamily, AgreesWithEdgeCriterion) {
    std::mt19937 rng(9);
    int checked = 0, matroids = 0;
    for (std::size_t n = 4; n <= 6; ++n)
        for (std::size_t k = 2; k + 2 <= n; ++k) {
            auto H = hypersimplex(k, n);
            for (int it = 0; it < 60; ++it) {
                std::size_t m = 1 + rng() % std::min<std::size_t>(15, H.vertex_sets.size());
                auto pool = H.vertex_sets;
                std::shuffle(pool.begin(), pool.end(), rng);
                SetFamily f(pool.begin(), pool.begin() + m);
                std::sort(f.begin(), f.end());
                bool ex = is_matroid_family(f);
                EXPECT_EQ(ex, edge_criterion(f, n));
                ++checked;
                matroids += ex;
            }
            // cells of 2-splits give matroids too
            for (auto& s : hypersimplex_two_splits(k, n))
                for (auto& C : ab_split_cells(s, H).cells) {
                    auto f = cell_family(H, C);
                    EXPECT_TRUE(is_matroid_family(f));
                    EXPECT_TRUE(edge_criterion(f, n));
                    ++matroids;
                }
        }
    EXPECT_GT(checked, 100);
    EXPECT_GT(matroids, 10);
}

TEST(MatroidSubdivision, TriangulationFails) {
    auto A = hypersimplex_config(2, 4);
    auto H = hypersimplex(2, 4);
    auto S = regular_subdivision(A, V({0, 1, 3, 2, 5, 4}));
    for (auto& C : S.cells) ASSERT_EQ(C.size(), 4u);
    EXPECT_FALSE(is_matroid_subdivision(H, S));
    EXPECT_TRUE(is_matroid_subdivision(H, trivial_subdivision(A)));
}

TEST(BasesByIntersectionBounds, Examples) {
    EXPECT_EQ(bases_by_intersection_bounds(6, 3, {}), hypersimplex(3, 6).vertex_sets);
    EXPECT_EQ(bases_by_intersection_bounds(6, 3, {{iota_set(6), 3}}), hypersimplex(3, 6).vertex_sets);
    EXPECT_THROW(bases_by_intersection_bounds(6, 3, {{S1({1, 2}), 2}, {S1({2, 3}), 1}}), DomainError);
    EXPECT_THROW(bases_by_intersection_bounds(6, 3, {{S1({7}), 1}}), DomainError);
    // nested sets are fine
    EXPECT_EQ(bases_by_intersection_bounds(4, 2, {{S1({1}), 0}, {S1({1, 2}), 0}}).size(), 1u);
    // a 3-split cell cut out by upper bounds only
    std::size_t k = 4, n = 8;
    auto H = hypersimplex(k, n);
    std::vector<std::pair<IndexSet, std::size_t>> parts = {{S1({1, 2, 3}), 2}, {S1({7, 8}), 1}};
    SetFamily cell;
    for (auto& S : H.vertex_sets)
        if (meet(S, parts[0].first) <= 2 && meet(S, parts[1].first) <= 1) cell.push_back(S);
    auto B = bases_by_intersection_bounds(n, k, parts);
    EXPECT_EQ(B, cell);
    EXPECT_TRUE(is_matroid_family(B));
}

TEST(BasesByIntersectionBounds, ThreeSplitCells) {
    for (auto [k, n] : {std::pair<std::size_t, std::size_t>{3, 6}, {4, 7}}) {
        auto H = hypersimplex(k, n);
        for (auto& t : enumerate_three_splits(k, n)) {
            auto S = three_split_cells(t, k, n);
            auto bounds = three_split_cell_bounds(t, k, n);
            ASSERT_EQ(bounds.size(), 3u);
            std::set<IndexSet> a(S.cells.begin(), S.cells.end()), b;
            for (auto& sys : bounds) {
                IndexSet cell;
                for (auto& B : bases_by_intersection_bounds(n, k, sys)) cell.push_back(H.index_of(B));
                b.insert(cell);
            }
            EXPECT_EQ(a, b);
        }
    }
}
