// 3-splits of Delta(3,6): count, one example, and its cells as matroids.
#include <splitspan/splitspan.hpp>

#include <iostream>

using namespace splitspan;

int main() {
    const std::size_t k = 3, n = 6;
    std::cout << "formula count: " << count_three_splits(k, n) << "\n";
    auto all = enumerate_three_splits(k, n);
    std::cout << "enumerated: " << all.size() << "\n";
    auto H = hypersimplex(k, n);
    auto& t = all.front();
    std::cout << "parts";
    for (std::size_t j = 0; j < 3; ++j) std::cout << " {" << set_label(t.parts[j]) << "}:" << t.mus[j];
    std::cout << ", orientation " << t.orientation << "\n";
    auto S = three_split_cells(t, k, n);
    for (auto& C : S.cells) {
        std::cout << "  cell with " << C.size() << " bases, matroid: " << std::boolalpha
                  << is_matroid_family(cell_family(H, C)) << "\n";
    }
    std::cout << "core:";
    for (auto v : three_split_core(t, k, n)) std::cout << " {" << set_label(H.vertex_sets[v]) << "}";
    std::cout << "\n";
}
