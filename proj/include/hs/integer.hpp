#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hs {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

// Overflow-checked integer arithmetic. Overflow throws rather than wrapping.
inline Int ck_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int ck_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int ck_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Floor division with a positive divisor.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = ck_add(s, ck_mul(a[i], b[i]));
    return s;
}

inline Vec vadd(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ck_add(a[i], b[i]);
    return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ck_sub(a[i], b[i]);
    return r;
}

inline Vec vscale(Int c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ck_mul(c, a[i]);
    return r;
}

inline Vec vneg(const Vec& a) { return vscale(-1, a); }

inline bool is_zero(const Vec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

inline Vec mat_apply(const Mat& m, const Vec& v) {
    Vec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat r(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] = ck_add(r[i][j], ck_mul(a[i][t], b[t][j]));
        }
    return r;
}

inline Mat mat_identity(std::size_t n) {
    Mat r(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

inline Mat mat_transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat r(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

std::string vec_str(const Vec& v);
Vec parse_vec(const std::string& s);

}  // namespace hs
