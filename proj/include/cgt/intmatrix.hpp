#pragma once

#include "cgt/jsonutil.hpp"
#include "cgt/words.hpp"

#include <array>
#include <stdexcept>

namespace cgt {

/// Dense square matrix over arbitrary-precision integers, row-major.
/// Group elements are unimodular; nothing here ever rounds or overflows.
template <int N>
struct Mat {
    std::array<Int, N * N> e{};

    static Mat identity() {
        Mat m;
        for (int i = 0; i < N; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(int r, int c) { return e[r * N + c]; }
    const Int& at(int r, int c) const { return e[r * N + c]; }

    Mat operator*(const Mat& rhs) const {
        Mat out;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < N; ++j) out.at(i, j) += a * rhs.at(k, j);
            }
        return out;
    }

    Mat operator-() const {
        Mat out = *this;
        for (auto& v : out.e) v = -v;
        return out;
    }

    bool operator==(const Mat&) const = default;

    bool is_identity() const { return *this == identity(); }

    Int entry_abs_sum() const {
        Int s = 0;
        for (const auto& v : e) s += abs(v);
        return s;
    }
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;
using Vec4 = std::array<Int, 4>;

inline Int det(const Mat2& m) { return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); }

inline Int det3(const std::array<Int, 9>& a) {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

inline Int det(const Mat4& m) {
    Int d = 0;
    for (int j = 0; j < 4; ++j) {
        std::array<Int, 9> minor;
        int idx = 0;
        for (int r = 1; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (c != j) minor[idx++] = m.at(r, c);
        Int term = m.at(0, j) * det3(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

inline Mat2 unimodular_inverse(const Mat2& m) {
    Int d = det(m);
    if (d != 1 && d != -1) throw std::domain_error("matrix is not unimodular");
    Mat2 adj;
    adj.at(0, 0) = m.at(1, 1);
    adj.at(0, 1) = -m.at(0, 1);
    adj.at(1, 0) = -m.at(1, 0);
    adj.at(1, 1) = m.at(0, 0);
    if (d == -1)
        for (auto& v : adj.e) v = -v;
    return adj;
}

inline Mat4 unimodular_inverse(const Mat4& m) {
    Int d = det(m);
    if (d != 1 && d != -1) throw std::domain_error("matrix is not unimodular");
    Mat4 adj;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::array<Int, 9> minor;
            int idx = 0;
            for (int r = 0; r < 4; ++r) {
                if (r == i) continue;
                for (int c = 0; c < 4; ++c)
                    if (c != j) minor[idx++] = m.at(r, c);
            }
            Int cof = det3(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj.at(j, i) = cof;  // adjugate transposes the cofactor matrix
        }
    if (d == -1)
        for (auto& v : adj.e) v = -v;
    return adj;
}

template <int N>
Mat<N> mat_pow(Mat<N> base, Int n) {
    if (n < 0) {
        base = unimodular_inverse(base);
        n = -n;
    }
    Mat<N> acc = Mat<N>::identity();
    while (n > 0) {
        if ((n & 1) != 0) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

inline Vec4 mat_vec(const Mat4& m, const Vec4& v) {
    Vec4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

inline Mat4 blockdiag(const Mat2& top, const Mat2& bottom) {
    Mat4 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m.at(i, j) = top.at(i, j);
            m.at(i + 2, j + 2) = bottom.at(i, j);
        }
    return m;
}

inline Mat2 block(const Mat4& m, int r0, int c0) {
    Mat2 b;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) b.at(i, j) = m.at(r0 + i, c0 + j);
    return b;
}

inline bool is_block_diagonal(const Mat4& m) {
    Mat2 zero;
    return block(m, 0, 2) == zero && block(m, 2, 0) == zero;
}

template <int N>
json matrix_to_json(const Mat<N>& m) {
    json j;
    j["dim"] = N;
    json rows = json::array();
    for (int r = 0; r < N; ++r) {
        json row = json::array();
        for (int c = 0; c < N; ++c) row.push_back(int_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

template <int N>
Mat<N> matrix_from_json(const json& j) {
    if (require_field(j, "dim").get<int>() != N)
        throw std::invalid_argument("matrix has wrong dimension");
    const json& rows = require_field(j, "rows");
    if (!rows.is_array() || rows.size() != N)
        throw std::invalid_argument("matrix needs exactly " + std::to_string(N) + " rows");
    Mat<N> m;
    for (int r = 0; r < N; ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != N)
            throw std::invalid_argument("matrix rows need " + std::to_string(N) + " entries");
        for (int c = 0; c < N; ++c) m.at(r, c) = int_from_json(row[c]);
    }
    return m;
}

}  // namespace cgt
