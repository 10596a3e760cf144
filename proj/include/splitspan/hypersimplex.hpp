#pragma once

#include "ksplit.hpp"

#include <array>

namespace splitspan {

// k-subsets of [n] (0-based), one per vertex, in lexicographic order.
using SetFamily = std::vector<IndexSet>;

struct Hypersimplex {
    std::size_t k = 0, n = 0;
    SetFamily vertex_sets;

    std::size_t index_of(const IndexSet& S) const {
        auto it = std::lower_bound(vertex_sets.begin(), vertex_sets.end(), S);
        if (it == vertex_sets.end() || *it != S) throw DomainError("not a vertex of the hypersimplex");
        return it - vertex_sets.begin();
    }
};

// Sigma_{i in B} x_i = mu, equivalently mu Sigma_A x = (k - mu) Sigma_B x
struct ABSplit {
    IndexSet A, B;
    std::size_t mu = 0;
};

struct TripartitionSplit {
    std::array<IndexSet, 3> parts;
    std::array<std::size_t, 3> mus{};
    int orientation = 1;  // 2 flips every inequality
};

inline Hypersimplex hypersimplex(std::size_t k, std::size_t n) {
    if (k < 1 || k + 1 > n) throw DomainError("hypersimplex needs 1 <= k <= n-1");
    Hypersimplex H{k, n, {}};
    detail::for_each_subset(n, k, [&](const IndexSet& s) { H.vertex_sets.push_back(s); });
    return H;
}

inline std::string set_label(const IndexSet& S) {
    std::string s;
    for (auto i : S) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    return s;
}

// The last coordinate is dropped (it is k minus the others), so the configuration spans R^{n-1}.
inline PointConfiguration hypersimplex_config(std::size_t k, std::size_t n) {
    Hypersimplex H = hypersimplex(k, n);
    std::vector<Vec> pts;
    std::vector<std::string> labels;
    for (auto& S : H.vertex_sets) {
        Vec p(n - 1);
        for (auto i : S)
            if (i + 1 < n) p[i] = 1;
        pts.push_back(p);
        labels.push_back(set_label(S));
    }
    return PointConfiguration(pts, labels);
}

inline std::size_t meet(const IndexSet& S, const IndexSet& A) { return set_intersection(S, A).size(); }

inline std::vector<ABSplit> hypersimplex_two_splits(std::size_t k, std::size_t n) {
    hypersimplex(k, n);
    std::set<std::pair<IndexSet, std::size_t>> seen;
    std::vector<ABSplit> out;
    for (std::size_t a = 1; a < n; ++a)
        detail::for_each_subset(n, a, [&](const IndexSet& A) {
            for (std::size_t mu = 1; mu + 1 <= k; ++mu) {
                if (a + mu < k + 1 || a + mu + 1 > n) continue;
                IndexSet B = set_difference(iota_set(n), A);
                auto key = std::min(std::make_pair(B, mu), std::make_pair(A, k - mu));
                if (seen.insert(key).second) out.push_back({A, B, mu});
            }
        });
    return out;
}

inline Subdivision ab_split_cells(const ABSplit& s, const Hypersimplex& H) {
    IndexSet lo, hi;
    for (std::size_t v = 0; v < H.vertex_sets.size(); ++v) {
        std::size_t m = meet(H.vertex_sets[v], s.B);
        if (m <= s.mu) lo.push_back(v);
        if (m >= s.mu) hi.push_back(v);
    }
    return Subdivision({lo, hi});
}

inline void check_tripartition(const TripartitionSplit& t, std::size_t k, std::size_t n) {
    IndexSet all;
    std::size_t total = 0, sum = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        if (t.mus[j] < 1 || t.mus[j] + 1 > t.parts[j].size()) throw DomainError("need 1 <= mu_j <= |A_j|-1");
        all = set_union(all, t.parts[j]);
        total += t.parts[j].size();
        sum += t.mus[j];
    }
    if (all != iota_set(n) || total != n) throw DomainError("parts do not partition [n]");
    if (sum != k) throw DomainError("mu values do not add up to k");
    if (t.orientation != 1 && t.orientation != 2) throw DomainError("orientation is 1 or 2");
}

inline Subdivision three_split_cells(const TripartitionSplit& t, std::size_t k, std::size_t n) {
    check_tripartition(t, k, n);
    Hypersimplex H = hypersimplex(k, n);
    auto le = [&](const IndexSet& S, std::size_t j) {
        std::size_t m = meet(S, t.parts[j]);
        return t.orientation == 1 ? m <= t.mus[j] : m >= t.mus[j];
    };
    auto ge = [&](const IndexSet& S, std::size_t j) {
        std::size_t m = meet(S, t.parts[j]);
        return t.orientation == 1 ? m >= t.mus[j] : m <= t.mus[j];
    };
    std::vector<IndexSet> cells(3);
    for (std::size_t v = 0; v < H.vertex_sets.size(); ++v) {
        auto& S = H.vertex_sets[v];
        if (le(S, 2) && ge(S, 1)) cells[0].push_back(v);
        if (le(S, 0) && ge(S, 2)) cells[1].push_back(v);
        if (le(S, 1) && ge(S, 0)) cells[2].push_back(v);
    }
    return Subdivision(cells);
}

inline IndexSet three_split_core(const TripartitionSplit& t, std::size_t k, std::size_t n) {
    check_tripartition(t, k, n);
    Hypersimplex H = hypersimplex(k, n);
    IndexSet core;
    for (std::size_t v = 0; v < H.vertex_sets.size(); ++v) {
        bool on = true;
        for (std::size_t j = 0; j < 3; ++j) on = on && meet(H.vertex_sets[v], t.parts[j]) == t.mus[j];
        if (on) core.push_back(v);
    }
    return core;
}

// Every unordered tripartition with every admissible mu, both orientations.
inline std::vector<TripartitionSplit> enumerate_three_splits(std::size_t k, std::size_t n) {
    hypersimplex(k, n);
    std::vector<TripartitionSplit> out;
    std::vector<std::size_t> label(n, 0);
    // restricted growth strings: part of element i is at most 1 + max part so far
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            if (used != 3) return;
            TripartitionSplit t;
            for (std::size_t e = 0; e < n; ++e) t.parts[label[e]].push_back(e);
            for (std::size_t m0 = 1; m0 < t.parts[0].size(); ++m0)
                for (std::size_t m1 = 1; m1 < t.parts[1].size(); ++m1) {
                    if (m0 + m1 >= k) continue;
                    std::size_t m2 = k - m0 - m1;
                    if (m2 >= t.parts[2].size()) continue;
                    t.mus = {m0, m1, m2};
                    for (int o : {1, 2}) {
                        t.orientation = o;
                        out.push_back(t);
                    }
                }
            return;
        }
        for (std::size_t p = 0; p < std::min<std::size_t>(used + 1, 3); ++p) {
            label[i] = p;
            rec(i + 1, std::max(used, p + 1));
        }
    };
    rec(0, 0);
    return out;
}

// Number of mu with mu1+mu2+mu3 = k, 1 <= mu1 <= alpha-1, 1 <= mu2 <= beta-1, 1 <= mu3 <= n-alpha-beta-1.
// Terms are clipped at zero.
inline long mu_count(std::size_t alpha, std::size_t beta, std::size_t k, std::size_t n) {
    if (alpha < 2 || beta < 2 || alpha + beta + 2 > n) throw DomainError("need alpha, beta >= 2 and alpha+beta <= n-2");
    long a = alpha, b = beta, g = static_cast<long>(n) - a - b, kk = k, total = 0;
    for (long i = 1; i <= std::min(a - 1, kk - 2); ++i) total += std::max(0L, std::min(b - 1, kk - i - 1) - std::max(0L, kk - i - g));
    return total;
}

// The same sum without clipping; negative terms appear once k is large relative to the parts.
inline long mu_count_literal(std::size_t alpha, std::size_t beta, std::size_t k, std::size_t n) {
    if (alpha < 2 || beta < 2 || alpha + beta + 2 > n) throw DomainError("need alpha, beta >= 2 and alpha+beta <= n-2");
    long a = alpha, b = beta, g = static_cast<long>(n) - a - b, kk = k, total = 0;
    for (long i = 1; i <= std::min(a - 1, kk - 2); ++i) total += std::min(b - 1, kk - i - 1) - std::max(0L, kk - i - g);
    return total;
}

// k = 4 shortcut: 3 minus the number of parts of size two.
inline long mu_count_k4(std::size_t alpha, std::size_t beta, std::size_t n) {
    long twos = (alpha == 2) + (beta == 2) + (n - alpha - beta == 2);
    return 3 - twos;
}

inline Integer binomial(std::size_t n, std::size_t r) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, r);
    return b;
}

inline Integer count_three_splits(std::size_t k, std::size_t n, bool literal = false) {
    hypersimplex(k, n);
    Integer total = 0;
    for (std::size_t a = 2; a + 4 <= n; ++a)
        for (std::size_t b = 2; a + b + 2 <= n; ++b) {
            long m = literal ? mu_count_literal(a, b, k, n) : mu_count(a, b, k, n);
            total += Integer(m) * binomial(n, a) * binomial(n - a, b);
        }
    if (total % 3 != 0) throw std::logic_error("three-split count not divisible by 3");
    return total / 3;
}

// Basis exchange: for B1, B2 and i in B1 \ B2 some j in B2 \ B1 has B1 - i + j in the family.
inline bool is_matroid_family(const SetFamily& f) {
    if (f.empty()) throw DomainError("empty set family");
    std::set<IndexSet> members(f.begin(), f.end());
    for (auto& S : f)
        if (S.size() != f[0].size()) return false;
    for (auto& B1 : members)
        for (auto& B2 : members)
            for (auto i : set_difference(B1, B2)) {
                bool found = false;
                for (auto j : set_difference(B2, B1)) {
                    IndexSet C = set_difference(B1, {i});
                    C.push_back(j);
                    normalize(C);
                    if (members.count(C)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
    return true;
}

inline SetFamily cell_family(const Hypersimplex& H, const IndexSet& cell) {
    SetFamily f;
    for (auto v : cell) f.push_back(H.vertex_sets[v]);
    return f;
}

inline bool is_matroid_subdivision(const Hypersimplex& H, const Subdivision& S) {
    for (auto& C : S.cells)
        if (!is_matroid_family(cell_family(H, C))) return false;
    return true;
}

// Bounds |B meet A| <= mu on a laminar family (any two sets disjoint or nested).
inline SetFamily bases_by_intersection_bounds(std::size_t n, std::size_t k,
                                              const std::vector<std::pair<IndexSet, std::size_t>>& bounds) {
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        for (auto e : bounds[i].first)
            if (e >= n) throw DomainError("bound set leaves the ground set");
        for (std::size_t j = 0; j < i; ++j) {
            const IndexSet &a = bounds[i].first, &b = bounds[j].first;
            if (!set_intersection(a, b).empty() && !is_subset(a, b) && !is_subset(b, a))
                throw DomainError("bound sets are not laminar");
        }
    }
    SetFamily out;
    detail::for_each_subset(n, k, [&](const IndexSet& B) {
        for (auto& [A, mu] : bounds)
            if (meet(B, A) > mu) return;
        out.push_back(B);
    });
    return out;
}

// Each 3-split cell as a laminar upper-bound system.
// A lower bound |S meet A_b| >= mu_b becomes |S meet ([n] - A_b)| <= k - mu_b.
inline std::vector<std::vector<std::pair<IndexSet, std::size_t>>> three_split_cell_bounds(
    const TripartitionSplit& t, std::size_t k, std::size_t n) {
    check_tripartition(t, k, n);
    // cell i: at most mu on part `lo`, at least mu on part `hi`
    const std::array<std::pair<std::size_t, std::size_t>, 3> pattern = {{{2, 1}, {0, 2}, {1, 0}}};
    std::vector<std::vector<std::pair<IndexSet, std::size_t>>> out;
    for (auto [lo, hi] : pattern) {
        if (t.orientation == 2) std::swap(lo, hi);
        out.push_back({{t.parts[lo], t.mus[lo]}, {set_difference(iota_set(n), t.parts[hi]), k - t.mus[hi]}});
    }
    return out;
}

}  // namespace splitspan
