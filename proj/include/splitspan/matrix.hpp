#pragma once

#include "rational.hpp"

#include <optional>
#include <utility>

namespace splitspan {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static RatMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        RatMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static RatMatrix from_rows(const std::vector<Vec>& rows) {
        return from_rows(rows, rows.empty() ? 0 : rows[0].size());
    }
    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    std::vector<Vec> row_list() const {
        std::vector<Vec> r;
        for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
        return r;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec operator*(const Vec& x) const {
        Vec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn((*this)(i, j)) != 0) r[i] += (*this)(i, j) * x[j];
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Bareiss elimination on row-scaled integer copies.
inline std::size_t rank(const RatMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    std::vector<IntVec> a(R, IntVec(C));
    for (std::size_t i = 0; i < R; ++i) {
        Vec row = m.row(i);
        a[i] = primitive(row);
    }
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && sgn(a[p][c]) == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

inline std::size_t rank(const std::vector<Vec>& rows, std::size_t cols) {
    return rank(RatMatrix::from_rows(rows, cols));
}

struct Echelon {
    RatMatrix reduced;  // nonzero rows only
    std::vector<std::size_t> pivots;
};

inline Echelon rref(const RatMatrix& m) {
    RatMatrix a = m;
    std::size_t R = a.rows(), C = a.cols();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && sgn(a(p, c)) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < C; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    RatMatrix red(r, C);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) red(i, j) = a(i, j);
    return {red, piv};
}

// One vector per free column of the reduced echelon form.
inline std::vector<Vec> kernel_basis(const RatMatrix& m) {
    Echelon e = rref(m);
    std::size_t C = m.cols();
    std::vector<bool> is_piv(C, false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        Vec v(C);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(v);
    }
    return basis;
}

inline std::vector<Vec> kernel_basis(const std::vector<Vec>& rows, std::size_t cols) {
    return kernel_basis(RatMatrix::from_rows(rows, cols));
}

// Canonical basis of the row space.
inline std::vector<Vec> row_space_basis(const std::vector<Vec>& rows, std::size_t cols) {
    return rref(RatMatrix::from_rows(rows, cols)).reduced.row_list();
}

// Some solution of m x = b, if any.
inline std::optional<Vec> solve(const RatMatrix& m, const Vec& b) {
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = rref(aug);
    Vec x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, m.cols());
    }
    return x;
}

struct AffineSubspace {
    Vec basepoint;
    std::vector<Vec> direction_basis;

    std::size_t dim() const { return direction_basis.size(); }
    std::size_t ambient_dim() const { return basepoint.size(); }

    bool contains(const Vec& p) const {
        std::vector<Vec> rows = direction_basis;
        rows.push_back(p - basepoint);
        return rank(rows, basepoint.size()) == direction_basis.size();
    }

    // Rows spanning the orthogonal complement of the direction space.
    std::vector<Vec> normal_space() const {
        if (direction_basis.empty()) {
            std::vector<Vec> r;
            for (std::size_t i = 0; i < basepoint.size(); ++i) {
                Vec e(basepoint.size());
                e[i] = 1;
                r.push_back(e);
            }
            return r;
        }
        return kernel_basis(direction_basis, basepoint.size());
    }
};

inline AffineSubspace affine_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw DomainError("affine hull of an empty set");
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    AffineSubspace s;
    s.basepoint = points[0];
    if (!diffs.empty()) s.direction_basis = row_space_basis(diffs, points[0].size());
    return s;
}

// Dimension of the affine hull; -1 for the empty set.
inline long affine_dim(const std::vector<Vec>& points) {
    if (points.empty()) return -1;
    std::vector<Vec> h;
    for (auto& p : points) h.push_back(homogenize(p));
    return static_cast<long>(rank(h, h[0].size())) - 1;
}

inline Rational determinant(RatMatrix a) {
    std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a(i, c)) == 0) continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

}  // namespace splitspan
