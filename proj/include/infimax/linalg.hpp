#pragma once

// Minimal fixed-size 3-vector / 3x3-matrix helpers. Integer variants carry
// exact Abelianization data, double variants carry covector arithmetic.

#include <array>
#include <cmath>
#include <cstdint>

namespace infimax {

using vec3 = std::array<double, 3>;
using vec3i = std::array<std::int64_t, 3>;

struct mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static mat3 identity() {
        mat3 r;
        for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
        return r;
    }

    mat3 operator*(const mat3& o) const {
        mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    vec3 operator*(const vec3& v) const {
        vec3 r{};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) r[i] += m[i][k] * v[k];
        return r;
    }

    mat3 transposed() const {
        mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    double max_abs() const {
        double s = 0.0;
        for (const auto& row : m)
            for (double x : row) s = std::max(s, std::abs(x));
        return s;
    }

    void scale(double c) {
        for (auto& row : m)
            for (double& x : row) x *= c;
    }

    vec3 column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
};

struct mat3i {
    std::array<std::array<std::int64_t, 3>, 3> m{};

    mat3i operator*(const mat3i& o) const {
        mat3i r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                std::int64_t s = 0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    vec3i operator*(const vec3i& v) const {
        vec3i r{};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) r[i] += m[i][k] * v[k];
        return r;
    }

    std::int64_t determinant() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    mat3 to_double() const {
        mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = static_cast<double>(m[i][j]);
        return r;
    }

    bool operator==(const mat3i&) const = default;
};

inline double dot(const vec3& a, const vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm2(const vec3& a) { return std::sqrt(dot(a, a)); }
inline double norm1(const vec3& a) { return std::abs(a[0]) + std::abs(a[1]) + std::abs(a[2]); }
inline vec3 scaled(const vec3& a, double c) { return {a[0] * c, a[1] * c, a[2] * c}; }

} // namespace infimax
