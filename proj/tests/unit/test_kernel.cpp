#include <gtest/gtest.h>

#include <splitspan/matrix.hpp>

#include "helpers.hpp"

using namespace splitspan;
using namespace testing_util;

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(R("6/4")), "3/2");
    EXPECT_EQ(to_string(R("-4/2")), "-2");
    EXPECT_EQ(to_string(R("0.25")), "1/4");
    EXPECT_EQ(to_string(R("-1.5")), "-3/2");
    EXPECT_EQ(to_string(R("7")), "7");
    EXPECT_THROW(R("1/0"), ParseError);
    EXPECT_THROW(R("abc"), ParseError);
    EXPECT_THROW(R("1/-2"), ParseError);
}

TEST(Rational, Primitive) {
    IntVec p = primitive(VS({"1/2", "-1/3", "0"}));
    EXPECT_EQ(p, (IntVec{3, -2, 0}));
    EXPECT_EQ(primitive(V({4, 6})), (IntVec{2, 3}));
}

TEST(Rank, Basics) {
    EXPECT_EQ(rank(RatMatrix::identity(3)), 3u);
    EXPECT_EQ(rank(RatMatrix(2, 4)), 0u);
    EXPECT_EQ(rank({V({1, 0}), V({2, 0}), V({0, 1})}, 2), 2u);
}

TEST(Kernel, Basics) {
    EXPECT_TRUE(kernel_basis(RatMatrix::identity(2)).empty());
    auto k = kernel_basis({V({1, 1, 1})}, 3);
    ASSERT_EQ(k.size(), 2u);
    for (auto& v : k) EXPECT_EQ(dot(v, V({1, 1, 1})), 0);
    EXPECT_EQ(rank(k, 3), 2u);
}

TEST(Kernel, SquareWithCenterHomogenized) {
    std::vector<Vec> rows = {V({1, 0, 0}), V({1, 0, 2}), V({1, 2, 0}), V({1, 2, 2}), V({1, 1, 1})};
    RatMatrix m = RatMatrix::from_rows(rows).transpose();
    auto k = kernel_basis(m);
    EXPECT_EQ(k.size(), 2u);
    for (auto& v : k) EXPECT_TRUE(is_zero(m * v));
}

TEST(Kernel, RandomRankNullity) {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < r; ++i) {
            Vec v;
            for (std::size_t j = 0; j < c; ++j) v.push_back(rng() % 3 == 0 ? Rational(0) : random_rational(rng, 3, 3));
            rows.push_back(v);
        }
        if (t % 4 == 0 && r > 1) rows[r - 1] = rows[0] + Rational(2) * rows[r - 2];
        RatMatrix m = RatMatrix::from_rows(rows, c);
        auto k = kernel_basis(m);
        EXPECT_EQ(rank(m) + k.size(), c);
        for (auto& v : k) EXPECT_TRUE(is_zero(m * v));
        EXPECT_EQ(rank(k.empty() ? std::vector<Vec>{} : k, c), k.size());
        EXPECT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(AffineHull, Dimensions) {
    EXPECT_EQ(affine_hull({V({0, 0})}).dim(), 0u);
    auto line = affine_hull({V({0, 0}), V({1, 1}), V({2, 2})});
    EXPECT_EQ(line.dim(), 1u);
    EXPECT_TRUE(line.contains(V({5, 5})));
    EXPECT_FALSE(line.contains(V({5, 4})));
    EXPECT_EQ(affine_hull({V({0, 0}), V({0, 2}), V({2, 0}), V({2, 2}), V({1, 1})}).dim(), 2u);
}

TEST(Solve, Determinant) {
    RatMatrix m = RatMatrix::from_rows({V({2, 1}), V({1, 3})});
    EXPECT_EQ(determinant(m), 5);
    auto x = solve(m, V({3, 4}));
    ASSERT_TRUE(x);
    EXPECT_EQ(m * *x, V({3, 4}));
    EXPECT_FALSE(solve(RatMatrix::from_rows({V({1, 1}), V({2, 2})}), V({1, 3})));
}
