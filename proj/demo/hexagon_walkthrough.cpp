// Hexagon with its center: two weights with the same tight span, then their split parts.
#include <splitspan/splitspan.hpp>

#include <iostream>

using namespace splitspan;

static std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
    return os << ")";
}

static void show(const Subdivision& S) {
    for (auto& C : S.cells) {
        std::cout << "  {";
        for (std::size_t i = 0; i < C.size(); ++i) std::cout << (i ? "," : "") << C[i] + 1;
        std::cout << "}\n";
    }
}

int main() {
    PointConfiguration A({Vec{0, 0}, Vec{1, 0}, Vec{2, 1}, Vec{2, 2}, Vec{1, 2}, Vec{0, 1}, Vec{1, 1}});
    Weight w{0, 0, 1, 1, 0, 0, 0}, wb{0, 0, 1, 1, 0, 0, 1};
    for (auto* x : {&w, &wb}) {
        std::cout << "weight " << *x << "\n";
        Subdivision S = regular_subdivision(A, *x);
        show(S);
        TightSpan T = tight_span(A, *x);
        std::cout << "  tight span vertices:";
        for (auto& v : T.vertices) std::cout << " " << v;
        std::cout << "\n";
        SplitDecomposition D = split_decomposition(A, *x);
        for (auto& [p, l] : D.lambda_one) std::cout << "  1-split at point " << p + 1 << ", coefficient " << to_string(l) << "\n";
        for (auto& [s, l] : D.lambda_two) std::cout << "  2-split " << s.normal << " = " << to_string(s.offset) << ", coefficient " << to_string(l) << "\n";
        std::cout << "  residual " << D.residual << (D.coherent ? ", coherent\n" : "\n");
    }
    std::cout << "second refines first: " << std::boolalpha
              << is_refinement(A, regular_subdivision(A, wb), regular_subdivision(A, w)) << "\n";
}
