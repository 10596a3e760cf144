// The 3-cube: its 2- and 3-splits, and whether they cut out the secondary polytope.
#include <splitspan/splitspan.hpp>

#include <iostream>

using namespace splitspan;

int main() {
    std::vector<Vec> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(Vec{(i >> 2) & 1, (i >> 1) & 1, i & 1});
    PointConfiguration C(pts);
    for (std::size_t k = 2; k <= 3; ++k) {
        auto ks = enumerate_ksplits(C, k);
        std::cout << ks.size() << " " << k << "-splits\n";
        if (k == 3)
            for (auto& K : ks) {
                Weight w = ksplit_weight(C, K);
                std::cout << "  core {";
                for (std::size_t i = 0; i < K.core_face.size(); ++i) std::cout << (i ? "," : "") << K.core_face[i] + 1;
                std::cout << "} weight";
                for (auto& x : w) std::cout << " " << to_string(x);
                std::cout << "\n";
            }
    }
    SecondaryPolytope P = secondary_polytope(C);
    std::cout << "secondary polytope: " << P.vertices.size() << " vertices, " << P.facets.size() << " facets\n";
    std::cout << std::boolalpha << "totally 2-splittable: " << is_totally_k_splittable(C, 2) << "\n"
              << "totally 3-splittable: " << is_totally_k_splittable(C, 3) << "\n";
}
