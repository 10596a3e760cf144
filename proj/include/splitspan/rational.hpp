#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitspan {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;
using IntVec = std::vector<Integer>;
// sorted, duplicate free
using IndexSet = std::vector<std::size_t>;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GuardError : std::runtime_error {
    std::string guard;
    GuardError(std::string g, const std::string& what)
        : std::runtime_error(what), guard(std::move(g)) {}
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "p", "p/q", and plain decimals such as "-1.25".
inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational");
    auto bad = [&] { return ParseError("not a rational: '" + text + "'"); };
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos) throw bad();
        bool neg = s[0] == '-';
        std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
        dot = body.find('.');
        std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw bad();
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        Integer num(ip + fp == "" ? "0" : ip + fp, 10);
        Integer den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }
    auto slash = s.find('/');
    auto digits = [](const std::string& t) {
        std::size_t st = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (st == t.size()) return false;
        for (std::size_t i = st; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string ns = s.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits(ns) || !digits(ds) || ds[0] == '-' || ds[0] == '+') throw bad();
    if (ns[0] == '+') ns = ns.substr(1);
    Integer num(ns, 10), den(ds, 10);
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

inline Integer dot(const IntVec& a, const IntVec& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator*(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

inline void make_primitive(IntVec& v) {
    Integer g = 0;
    for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Positive multiple of v with coprime integer entries.
inline IntVec primitive(const Vec& v) {
    Integer l = 1;
    for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_num() * (l / v[i].get_den());
    make_primitive(r);
    return r;
}

inline Vec to_vec(const IntVec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

inline Vec primitive_vec(const Vec& v) { return to_vec(primitive(v)); }

inline Vec homogenize(const Vec& p) {
    Vec r;
    r.reserve(p.size() + 1);
    r.push_back(1);
    r.insert(r.end(), p.begin(), p.end());
    return r;
}

inline bool contains(const IndexSet& s, std::size_t i) {
    return std::binary_search(s.begin(), s.end(), i);
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet iota_set(std::size_t n) {
    IndexSet r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = i;
    return r;
}

inline void normalize(IndexSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace splitspan
