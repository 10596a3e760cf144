#pragma once

#include "rational.hpp"

#include <optional>

namespace splitspan {

enum class Sense { le, ge, eq };
enum class LPStatus { optimal, infeasible, unbounded };

struct LinearProgram {
    struct Row {
        Vec a;
        Sense sense;
        Rational b;
    };

    explicit LinearProgram(std::size_t n) : num_vars(n), nonneg(n, false), objective(n) {}

    std::size_t num_vars;
    std::vector<bool> nonneg;  // variables are free unless marked
    std::vector<Row> rows;
    Vec objective;
    bool maximize = true;

    void add(Vec a, Sense s, Rational b) { rows.push_back({std::move(a), s, std::move(b)}); }
};

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Vec x;
    Rational value;
};

namespace detail {

struct Tableau {
    std::vector<Vec> t;  // rows, last entry is the right hand side
    std::vector<std::size_t> basis;
    std::size_t ncols = 0;

    void pivot(std::size_t r, std::size_t c, Vec& cost) {
        Rational inv = 1 / t[r][c];
        for (auto& x : t[r])
            if (sgn(x) != 0) x *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= ncols; ++j)
            if (sgn(t[r][j]) != 0) nz.push_back(j);
        auto eliminate = [&](Vec& row) {
            if (sgn(row[c]) == 0) return;
            Rational f = row[c];
            for (auto j : nz) row[j] -= f * t[r][j];
        };
        for (std::size_t i = 0; i < t.size(); ++i)
            if (i != r) eliminate(t[i]);
        eliminate(cost);
        basis[r] = c;
    }

    // Minimizes cost over the allowed columns. cost holds reduced costs on entry.
    bool run(Vec& cost, const std::vector<bool>& allowed) {
        std::size_t degenerate = 0;
        bool bland = false;
        for (;;) {
            std::size_t e = ncols;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (!allowed[j] || sgn(cost[j]) >= 0) continue;
                if (bland) {
                    e = j;
                    break;
                }
                if (e == ncols || cost[j] < cost[e]) e = j;
            }
            if (e == ncols) return true;
            std::size_t r = t.size();
            Rational best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (sgn(t[i][e]) <= 0) continue;
                Rational ratio = t[i][ncols] / t[i][e];
                if (r == t.size() || ratio < best || (ratio == best && basis[i] < basis[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r == t.size()) return false;
            if (sgn(best) == 0) {
                if (++degenerate > 30) bland = true;
            } else {
                degenerate = 0;
            }
            pivot(r, e, cost);
        }
    }
};

}  // namespace detail

// Exact two-phase simplex. Dantzig pricing, switching to Bland's rule on stalling.
inline LPResult solve(const LinearProgram& lp) {
    using detail::Tableau;
    std::size_t n = lp.num_vars;
    std::vector<std::size_t> pos(n), neg(n, SIZE_MAX);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        pos[j] = col++;
        if (!lp.nonneg[j]) neg[j] = col++;
    }
    std::size_t nstruct = col;
    std::size_t m = lp.rows.size();
    std::vector<std::size_t> slack(m, SIZE_MAX), art(m, SIZE_MAX);
    std::vector<Sense> sense(m);
    std::vector<bool> flip(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        sense[i] = lp.rows[i].sense;
        if (sgn(lp.rows[i].b) < 0) {
            flip[i] = true;
            if (sense[i] == Sense::le) sense[i] = Sense::ge;
            else if (sense[i] == Sense::ge) sense[i] = Sense::le;
        }
        if (sense[i] != Sense::eq) slack[i] = col++;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (sense[i] != Sense::le) art[i] = col++;
    Tableau T;
    T.ncols = col;
    T.t.assign(m, Vec(col + 1));
    T.basis.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.rows[i];
        Vec& tr = T.t[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(row.a[j]) == 0) continue;
            Rational v = flip[i] ? Rational(-row.a[j]) : row.a[j];
            tr[pos[j]] = v;
            if (neg[j] != SIZE_MAX) tr[neg[j]] = -v;
        }
        tr[col] = flip[i] ? Rational(-row.b) : row.b;
        if (sense[i] == Sense::le) {
            tr[slack[i]] = 1;
            T.basis[i] = slack[i];
        } else {
            if (sense[i] == Sense::ge) tr[slack[i]] = -1;
            tr[art[i]] = 1;
            T.basis[i] = art[i];
        }
    }
    LPResult res;
    std::vector<bool> is_art(col + 1, false);
    for (auto a : art)
        if (a != SIZE_MAX) is_art[a] = true;
    // phase one
    Vec cost(col + 1);
    bool any_art = false;
    for (std::size_t i = 0; i < m; ++i) {
        if (art[i] == SIZE_MAX) continue;
        any_art = true;
        for (std::size_t j = 0; j <= col; ++j)
            if (!is_art[j] && sgn(T.t[i][j]) != 0) cost[j] -= T.t[i][j];
    }
    if (any_art) {
        T.run(cost, std::vector<bool>(col, true));
        if (sgn(cost[col]) != 0) {
            res.status = LPStatus::infeasible;
            return res;
        }
        for (std::size_t i = 0; i < T.t.size();) {
            if (!is_art[T.basis[i]]) {
                ++i;
                continue;
            }
            std::size_t e = col;
            for (std::size_t j = 0; j < col; ++j)
                if (!is_art[j] && sgn(T.t[i][j]) != 0) {
                    e = j;
                    break;
                }
            if (e == col) {
                T.t.erase(T.t.begin() + i);
                T.basis.erase(T.basis.begin() + i);
                continue;
            }
            T.pivot(i, e, cost);
            ++i;
        }
    }
    // phase two
    Vec c2(col + 1);
    for (std::size_t j = 0; j < n; ++j) {
        Rational cj = lp.maximize ? Rational(-lp.objective[j]) : lp.objective[j];
        c2[pos[j]] = cj;
        if (neg[j] != SIZE_MAX) c2[neg[j]] = -cj;
    }
    for (std::size_t i = 0; i < T.t.size(); ++i) {
        Rational cb = c2[T.basis[i]];
        if (sgn(cb) == 0) continue;
        for (std::size_t j = 0; j <= col; ++j)
            if (sgn(T.t[i][j]) != 0) c2[j] -= cb * T.t[i][j];
    }
    std::vector<bool> allowed(col, true);
    for (std::size_t j = 0; j < col; ++j) allowed[j] = !is_art[j];
    bool bounded = T.run(c2, allowed);
    Vec colval(col);
    for (std::size_t i = 0; i < T.t.size(); ++i) colval[T.basis[i]] = T.t[i][col];
    res.x.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        res.x[j] = colval[pos[j]];
        if (neg[j] != SIZE_MAX) res.x[j] -= colval[neg[j]];
    }
    (void)nstruct;
    res.value = dot(lp.objective, res.x);
    res.status = bounded ? LPStatus::optimal : LPStatus::unbounded;
    return res;
}

// a.x > b, a.x >= b, a.x = b
struct Constraint {
    Vec a;
    Rational b;
};

inline bool satisfies(const Vec& x, const std::vector<Constraint>& strict,
                      const std::vector<Constraint>& weak, const std::vector<Constraint>& eqs) {
    for (auto& c : strict)
        if (!(dot(c.a, x) > c.b)) return false;
    for (auto& c : weak)
        if (dot(c.a, x) < c.b) return false;
    for (auto& c : eqs)
        if (dot(c.a, x) != c.b) return false;
    return true;
}

// Interior witness of the mixed strict/weak/equality system, or nullopt when infeasible.
inline std::optional<Vec> strict_lp_feasible(const std::vector<Constraint>& strict,
                                             const std::vector<Constraint>& weak,
                                             const std::vector<Constraint>& eqs, std::size_t dim) {
    bool homogeneous = true;
    for (auto* list : {&strict, &weak, &eqs})
        for (auto& c : *list)
            if (sgn(c.b) != 0) homogeneous = false;
    bool use_eps = !strict.empty() && !homogeneous;
    LinearProgram lp(dim + (use_eps ? 1 : 0));
    auto ext = [&](const Vec& a, const Rational& e) {
        Vec r = a;
        if (use_eps) r.push_back(e);
        return r;
    };
    for (auto& c : strict) {
        if (use_eps) lp.add(ext(c.a, -1), Sense::ge, c.b);
        else lp.add(c.a, Sense::ge, 1);
    }
    for (auto& c : weak) lp.add(ext(c.a, 0), Sense::ge, c.b);
    for (auto& c : eqs) lp.add(ext(c.a, 0), Sense::eq, c.b);
    if (use_eps) {
        Vec e(dim + 1);
        e[dim] = 1;
        lp.add(e, Sense::le, 1);
        lp.objective = e;
    }
    LPResult r = solve(lp);
    if (r.status == LPStatus::infeasible) return std::nullopt;
    if (use_eps && sgn(r.x[dim]) <= 0) return std::nullopt;
    Vec x(r.x.begin(), r.x.begin() + dim);
    if (!satisfies(x, strict, weak, eqs)) throw std::logic_error("simplex returned an invalid witness");
    return x;
}

}  // namespace splitspan
