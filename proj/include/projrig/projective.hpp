#ifndef PROJRIG_PROJECTIVE_HPP
#define PROJRIG_PROJECTIVE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "projrig/rational.hpp"

namespace projrig {

template <class T>
using Vec3 = std::array<T, 3>;

template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool coord_is_zero(const Rational& x, double) { return sgn(x) == 0; }
inline bool coord_is_zero(double x, double scale) {
    return std::abs(x) <= 1e-10 * (scale > 1.0 ? scale : 1.0);
}

template <class T>
double coord_scale(const Vec3<T>& v) {
    double s = 0;
    for (const T& c : v) {
        double a = std::abs(scalar_traits<T>::as_double(c));
        if (a > s) s = a;
    }
    return s;
}

// Index of the last nonzero coordinate; -1 for the zero vector.
template <class T>
int last_nonzero(const Vec3<T>& v) {
    const double s = coord_scale(v);
    for (int k = 2; k >= 0; --k)
        if (!coord_is_zero(v[k], s)) return k;
    return -1;
}

// Representative with last nonzero coordinate equal to 1.
template <class T>
Vec3<T> normalize_rep(const Vec3<T>& v) {
    const int k = last_nonzero(v);
    if (k < 0) throw std::invalid_argument("cannot normalize the zero vector");
    Vec3<T> out;
    for (int i = 0; i < 3; ++i) out[i] = v[i] / v[k];
    if constexpr (!scalar_traits<T>::exact) {
        for (int i = k + 1; i < 3; ++i) out[i] = 0.0;
    }
    out[k] = T(1);
    return out;
}

// normalize_rep(v) together with the factor lambda such that v = lambda * rep.
template <class T>
std::pair<Vec3<T>, T> normalize_rep_factor(const Vec3<T>& v) {
    const int k = last_nonzero(v);
    if (k < 0) throw std::invalid_argument("cannot normalize the zero vector");
    Vec3<T> out;
    for (int i = 0; i < 3; ++i) out[i] = v[i] / v[k];
    if constexpr (!scalar_traits<T>::exact) {
        for (int i = k + 1; i < 3; ++i) out[i] = 0.0;
    }
    out[k] = T(1);
    return {out, v[k]};
}

template <class T>
bool projectively_equal(const Vec3<T>& a, const Vec3<T>& b, double tol = 1e-7) {
    const Vec3<T> na = normalize_rep(a), nb = normalize_rep(b);
    if constexpr (scalar_traits<T>::exact) {
        (void)tol;
        return na == nb;
    } else {
        for (int i = 0; i < 3; ++i)
            if (std::abs(na[i] - nb[i]) > tol) return false;
        return true;
    }
}

// ---------------------------------------------------------------------------
// 3x3 matrices
// ---------------------------------------------------------------------------

template <class T>
Mat3<T> mat3_identity() {
    Mat3<T> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = T(i == j ? 1 : 0);
    return m;
}

template <class T>
Mat3<T> mat3_mul(const Mat3<T>& a, const Mat3<T>& b) {
    Mat3<T> c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T s(0);
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

template <class T>
Vec3<T> mat3_apply(const Mat3<T>& m, const Vec3<T>& v) {
    Vec3<T> out;
    for (int i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return out;
}

template <class T>
Mat3<T> mat3_transpose(const Mat3<T>& m) {
    Mat3<T> t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
    return t;
}

template <class T>
T mat3_det(const Mat3<T>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Inverse via the adjugate; exact for Rational. Throws on singular input.
template <class T>
Mat3<T> mat3_inverse(const Mat3<T>& m) {
    const T d = mat3_det(m);
    const double s = [&] {
        double mx = 0;
        for (auto& r : m)
            for (auto& c : r) mx = std::max(mx, std::abs(scalar_traits<T>::as_double(c)));
        return mx * mx * mx;
    }();
    if (coord_is_zero(d, s)) throw std::invalid_argument("singular 3x3 matrix");
    Mat3<T> inv;
    inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return inv;
}

template <class T>
bool mat3_is_orthogonal(const Mat3<T>& m, double tol = 1e-12) {
    const Mat3<T> p = mat3_mul(mat3_transpose(m), m);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const T want(i == j ? 1 : 0);
            if constexpr (scalar_traits<T>::exact) {
                if (p[i][j] != want) return false;
            } else {
                if (std::abs(p[i][j] - want) > tol) return false;
            }
        }
    return true;
}

// Representative of a PGL(3, R) element: an invertible 3x3 matrix.
template <class T>
struct ProjectiveTransformation {
    Mat3<T> matrix;

    static ProjectiveTransformation from(Mat3<T> m) {
        double mx = 0;
        for (const auto& r : m)
            for (const auto& c : r)
                mx = std::max(mx, std::abs(scalar_traits<T>::as_double(c)));
        if (coord_is_zero(mat3_det(m), mx * mx * mx))
            throw std::invalid_argument("projective transformation must be invertible");
        return {std::move(m)};
    }

    ProjectiveTransformation inverse() const { return {mat3_inverse(matrix)}; }

    Vec3<T> apply_point(const Vec3<T>& p) const { return mat3_apply(matrix, p); }
    // Lines transform by the inverse transpose so incidence is preserved.
    Vec3<T> apply_line(const Vec3<T>& l) const {
        return mat3_apply(mat3_transpose(mat3_inverse(matrix)), l);
    }
};

template <class T>
Mat3<T> mat3_from_rows(const Vec3<T>& r0, const Vec3<T>& r1, const Vec3<T>& r2) {
    return Mat3<T>{{{r0[0], r0[1], r0[2]}, {r1[0], r1[1], r1[2]}, {r2[0], r2[1], r2[2]}}};
}

}  // namespace projrig

#endif
