#pragma once

#include <splitspan/rational.hpp>

#include <initializer_list>
#include <random>
#include <string>

namespace testing_util {

using namespace splitspan;

inline Rational R(const std::string& s) { return parse_rational(s); }
inline Rational R(long v) { return Rational(v); }

inline Vec V(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

inline Vec VS(std::initializer_list<const char*> xs) {
    Vec v;
    for (auto x : xs) v.push_back(parse_rational(x));
    return v;
}

inline IndexSet S1(std::initializer_list<std::size_t> one_based) {
    IndexSet s;
    for (auto i : one_based) s.push_back(i - 1);
    normalize(s);
    return s;
}

inline Rational random_rational(std::mt19937& rng, int num_range, int den_max) {
    std::uniform_int_distribution<int> n(-num_range, num_range), d(1, den_max);
    Rational q(n(rng), d(rng));
    q.canonicalize();
    return q;
}

}  // namespace testing_util

#include <splitspan/config.hpp>

namespace testing_util {

inline PointConfiguration square_with_center() {
    return PointConfiguration({V({0, 0}), V({0, 2}), V({2, 0}), V({2, 2}), V({1, 1})});
}

inline PointConfiguration hexagon_with_center() {
    return PointConfiguration({V({0, 0}), V({1, 0}), V({2, 1}), V({2, 2}), V({1, 2}), V({0, 1}), V({1, 1})});
}

inline PointConfiguration unit_square() { return PointConfiguration({V({0, 0}), V({0, 1}), V({1, 0}), V({1, 1})}); }

inline PointConfiguration cube3() {
    std::vector<Vec> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(V({(i >> 2) & 1, (i >> 1) & 1, i & 1}));
    return PointConfiguration(pts);
}

inline Subdivision SD(std::initializer_list<std::initializer_list<std::size_t>> cells) {
    std::vector<IndexSet> c;
    for (auto& x : cells) c.push_back(S1(x));
    return Subdivision(c);
}

// Random full-dimensional configuration with small integer coordinates.
inline PointConfiguration random_configuration(std::mt19937& rng, std::size_t n, std::size_t d, int range = 3) {
    for (;;) {
        std::vector<Vec> pts;
        std::uniform_int_distribution<int> u(-range, range);
        for (std::size_t i = 0; i < n; ++i) {
            Vec p;
            for (std::size_t j = 0; j < d; ++j) p.push_back(Rational(u(rng)));
            pts.push_back(p);
        }
        if (affine_dim(pts) == static_cast<long>(d)) return PointConfiguration(pts);
    }
}

inline Weight random_weight(std::mt19937& rng, std::size_t n, int range = 4) {
    Weight w;
    std::uniform_int_distribution<int> u(-range, range);
    for (std::size_t i = 0; i < n; ++i) w.push_back(Rational(u(rng)));
    return w;
}


// Outer triangle with a smaller inner copy turned by the angle with cos 60/61, sin 11/61.
inline PointConfiguration twisted_triangles() {
    std::vector<Vec> outer = {V({0, 0}), V({12, 0}), V({0, 12})};
    Vec c = V({4, 4});
    Rational co(60, 61), si(11, 61);
    std::vector<Vec> pts = outer;
    for (auto& a : outer) {
        Vec x = a - c;
        pts.push_back(c + Vec{(co * x[0] - si * x[1]) / 3, (si * x[0] + co * x[1]) / 3});
    }
    return PointConfiguration(pts);
}
inline Subdivision twisted_ring() { return SD({{4, 5, 6}, {1, 2, 5, 4}, {2, 3, 6, 5}, {3, 1, 4, 6}}); }

// Hexagon with two interior points on its long axis.
inline PointConfiguration long_hexagon() {
    return PointConfiguration({V({-3, 0}), V({-2, 2}), V({2, 2}), V({3, 0}), V({2, -2}), V({-2, -2}), V({-1, 0}), V({1, 0})});
}
inline Subdivision long_hexagon_cells() { return SD({{7, 8, 3, 2}, {7, 8, 5, 6}, {7, 2, 1, 6}, {8, 3, 4, 5}}); }

inline PointConfiguration octahedron() {
    return PointConfiguration({V({1, 0, 0}), V({0, 1, 0}), V({0, -1, 0}), V({-1, 0, 0}), V({0, 0, 1}), V({0, 0, -1})});
}
inline PointConfiguration octahedron_with_point() {
    auto pts = octahedron().points;
    pts.push_back(VS({"1/6", "-1/6", "1/6"}));
    return PointConfiguration(pts);
}
inline Subdivision octahedron_cells() {
    return SD({{2, 3, 4, 5, 7}, {1, 2, 5, 7}, {1, 3, 5, 7}, {2, 3, 4, 6}, {1, 2, 3, 6, 7}});
}

inline PointConfiguration triangle_with_center() { return PointConfiguration({V({0, 0}), V({3, 0}), V({0, 3}), V({1, 1})}); }

// Cones from interior point(s) over the boundary: prism, square pyramid.
inline PointConfiguration prism_with_point() {
    return PointConfiguration({V({0, 0, 0}), V({4, 0, 0}), V({0, 4, 0}), V({0, 0, 4}), V({4, 0, 4}), V({0, 4, 4}), V({1, 1, 2})});
}
inline Subdivision prism_cones() { return SD({{1, 2, 3, 7}, {4, 5, 6, 7}, {1, 2, 4, 5, 7}, {1, 3, 4, 6, 7}, {2, 3, 5, 6, 7}}); }
inline PointConfiguration prism_with_two_points() {
    return PointConfiguration({V({0, 0, 0}), V({4, 0, 0}), V({0, 4, 0}), V({0, 0, 4}), V({4, 0, 4}), V({0, 4, 4}), V({1, 1, 1}), V({1, 1, 3})});
}
inline Subdivision prism_two_cones() {
    return SD({{1, 2, 3, 7}, {4, 5, 6, 8}, {1, 2, 4, 5, 7, 8}, {1, 3, 4, 6, 7, 8}, {2, 3, 5, 6, 7, 8}});
}
inline PointConfiguration pyramid_with_point() {
    return PointConfiguration({V({-2, -2, 0}), V({2, -2, 0}), V({2, 2, 0}), V({-2, 2, 0}), V({0, 0, 4}), V({0, 0, 1})});
}
inline Subdivision pyramid_cones() { return SD({{1, 2, 3, 4, 6}, {1, 2, 5, 6}, {2, 3, 5, 6}, {3, 4, 5, 6}, {4, 1, 5, 6}}); }

}  // namespace testing_util
