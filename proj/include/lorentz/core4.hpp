#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <utility>

#include "lorentz/errors.hpp"

namespace lorentz {

using cplx = std::complex<double>;

template <class T, std::size_t N>
struct Vec {
    std::array<T, N> e{};

    T& operator[](std::size_t i) { return e[i]; }
    const T& operator[](std::size_t i) const { return e[i]; }
    static constexpr std::size_t size() { return N; }
    bool operator==(const Vec&) const = default;
};

// Row-major dense N x N matrix.
template <class T, std::size_t N>
struct Mat {
    std::array<T, N * N> e{};

    T& operator()(std::size_t i, std::size_t j) { return e[i * N + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e[i * N + j]; }
    static constexpr std::size_t size() { return N; }
    bool operator==(const Mat&) const = default;

    static Mat identity() {
        Mat m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = T(1);
        return m;
    }
    static Mat zero() { return Mat{}; }
};

using Vec3 = Vec<double, 3>;
using Vec4 = Vec<double, 4>;
using Vec3c = Vec<cplx, 3>;
using Vec4c = Vec<cplx, 4>;
using Mat3 = Mat<double, 3>;
using Mat4 = Mat<double, 4>;
using Mat2c = Mat<cplx, 2>;
using Mat3c = Mat<cplx, 3>;
using Mat4c = Mat<cplx, 4>;

template <class T>
using scalar_of = std::type_identity_t<T>;

// ---- elementwise vector arithmetic ----

template <class T, std::size_t N>
Vec<T, N> operator+(Vec<T, N> a, const Vec<T, N>& b) {
    for (std::size_t i = 0; i < N; ++i) a.e[i] += b.e[i];
    return a;
}
template <class T, std::size_t N>
Vec<T, N> operator-(Vec<T, N> a, const Vec<T, N>& b) {
    for (std::size_t i = 0; i < N; ++i) a.e[i] -= b.e[i];
    return a;
}
template <class T, std::size_t N>
Vec<T, N> operator-(Vec<T, N> a) {
    for (auto& x : a.e) x = -x;
    return a;
}
template <class T, std::size_t N>
Vec<T, N> operator*(Vec<T, N> a, scalar_of<T> s) {
    for (auto& x : a.e) x *= s;
    return a;
}
template <class T, std::size_t N>
Vec<T, N> operator*(scalar_of<T> s, Vec<T, N> a) {
    return a * s;
}
template <class T, std::size_t N>
Vec<T, N> operator/(Vec<T, N> a, scalar_of<T> s) {
    for (auto& x : a.e) x /= s;
    return a;
}
template <class T, std::size_t N>
Vec<T, N>& operator+=(Vec<T, N>& a, const Vec<T, N>& b) {
    a = a + b;
    return a;
}
template <class T, std::size_t N>
Vec<T, N>& operator-=(Vec<T, N>& a, const Vec<T, N>& b) {
    a = a - b;
    return a;
}

// Bilinear dot product (no conjugation for complex vectors).
template <class T, std::size_t N>
T dot(const Vec<T, N>& a, const Vec<T, N>& b) {
    T s{};
    for (std::size_t i = 0; i < N; ++i) s += a.e[i] * b.e[i];
    return s;
}

template <class T>
Vec<T, 3> cross(const Vec<T, 3>& a, const Vec<T, 3>& b) {
    return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

// Euclidean length; |x|^2 summed for complex vectors.
template <class T, std::size_t N>
double norm(const Vec<T, N>& a) {
    double s = 0.0;
    for (const auto& x : a.e) s += std::norm(x);
    return std::sqrt(s);
}

template <class T, std::size_t N>
Vec<T, N> normalized(const Vec<T, N>& a) {
    return a / scalar_of<T>(norm(a));
}

// ---- matrix arithmetic ----

template <class T, std::size_t N>
Mat<T, N> operator+(Mat<T, N> a, const Mat<T, N>& b) {
    for (std::size_t i = 0; i < N * N; ++i) a.e[i] += b.e[i];
    return a;
}
template <class T, std::size_t N>
Mat<T, N> operator-(Mat<T, N> a, const Mat<T, N>& b) {
    for (std::size_t i = 0; i < N * N; ++i) a.e[i] -= b.e[i];
    return a;
}
template <class T, std::size_t N>
Mat<T, N> operator-(Mat<T, N> a) {
    for (auto& x : a.e) x = -x;
    return a;
}
template <class T, std::size_t N>
Mat<T, N> operator*(Mat<T, N> a, scalar_of<T> s) {
    for (auto& x : a.e) x *= s;
    return a;
}
template <class T, std::size_t N>
Mat<T, N> operator*(scalar_of<T> s, Mat<T, N> a) {
    return a * s;
}
template <class T, std::size_t N>
Mat<T, N> operator/(Mat<T, N> a, scalar_of<T> s) {
    for (auto& x : a.e) x /= s;
    return a;
}
template <class T, std::size_t N>
Mat<T, N>& operator+=(Mat<T, N>& a, const Mat<T, N>& b) {
    a = a + b;
    return a;
}
template <class T, std::size_t N>
Mat<T, N>& operator-=(Mat<T, N>& a, const Mat<T, N>& b) {
    a = a - b;
    return a;
}

template <class T, std::size_t N>
Mat<T, N> operator*(const Mat<T, N>& a, const Mat<T, N>& b) {
    Mat<T, N> c;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            const T aik = a(i, k);
            for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <class T, std::size_t N>
Vec<T, N> operator*(const Mat<T, N>& a, const Vec<T, N>& x) {
    Vec<T, N> y;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) y[i] += a(i, j) * x[j];
    return y;
}

template <class T, std::size_t N>
Mat<T, N> transpose(const Mat<T, N>& a) {
    Mat<T, N> t;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) t(j, i) = a(i, j);
    return t;
}

template <class T, std::size_t N>
T trace(const Mat<T, N>& a) {
    T s{};
    for (std::size_t i = 0; i < N; ++i) s += a(i, i);
    return s;
}

template <class T, std::size_t N>
Mat<T, N> outer(const Vec<T, N>& a, const Vec<T, N>& b) {
    Mat<T, N> m;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = a[i] * b[j];
    return m;
}

// Plain Frobenius norm, sqrt(sum |a_ij|^2). Submultiplicative.
template <class T, std::size_t N>
double frobenius(const Mat<T, N>& a) {
    double s = 0.0;
    for (const auto& x : a.e) s += std::norm(x);
    return std::sqrt(s);
}

// Normalized Frobenius norm, |I| = 1.
template <class T, std::size_t N>
double norm(const Mat<T, N>& a) {
    return frobenius(a) / std::sqrt(double(N));
}

template <class T, std::size_t N>
double max_abs(const Mat<T, N>& a) {
    double m = 0.0;
    for (const auto& x : a.e) m = std::max(m, std::abs(x));
    return m;
}

template <class T, std::size_t N>
double max_abs(const Vec<T, N>& a) {
    double m = 0.0;
    for (const auto& x : a.e) m = std::max(m, std::abs(x));
    return m;
}

template <class T, std::size_t N>
bool all_finite(const Mat<T, N>& a) {
    for (const auto& x : a.e)
        if (!std::isfinite(std::real(x)) || !std::isfinite(std::imag(x))) return false;
    return true;
}

template <class T, std::size_t N>
bool all_finite(const Vec<T, N>& a) {
    for (const auto& x : a.e)
        if (!std::isfinite(std::real(x)) || !std::isfinite(std::imag(x))) return false;
    return true;
}

template <class A>
void require_finite(const A& a, const char* what) {
    if (!all_finite(a)) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": non-finite entry");
}

// ---- real/complex conversions ----

template <std::size_t N>
Vec<cplx, N> to_complex(const Vec<double, N>& a) {
    Vec<cplx, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i];
    return r;
}
template <std::size_t N>
Mat<cplx, N> to_complex(const Mat<double, N>& a) {
    Mat<cplx, N> r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = a.e[i];
    return r;
}
template <std::size_t N>
Vec<double, N> real_part(const Vec<cplx, N>& a) {
    Vec<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i].real();
    return r;
}
template <std::size_t N>
Vec<double, N> imag_part(const Vec<cplx, N>& a) {
    Vec<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i].imag();
    return r;
}
template <std::size_t N>
Mat<double, N> real_part(const Mat<cplx, N>& a) {
    Mat<double, N> r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = a.e[i].real();
    return r;
}
template <std::size_t N>
Mat<double, N> imag_part(const Mat<cplx, N>& a) {
    Mat<double, N> r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = a.e[i].imag();
    return r;
}
template <std::size_t N>
Vec<cplx, N> conj(const Vec<cplx, N>& a) {
    Vec<cplx, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = std::conj(a[i]);
    return r;
}
template <std::size_t N>
Mat<cplx, N> conj(const Mat<cplx, N>& a) {
    Mat<cplx, N> r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = std::conj(a.e[i]);
    return r;
}
template <std::size_t N>
Mat<cplx, N> adjoint(const Mat<cplx, N>& a) {
    return conj(transpose(a));
}

// ---- determinant and inverse (partial-pivot LU) ----

template <class T, std::size_t N>
T det(Mat<T, N> a) {
    T d(1);
    for (std::size_t k = 0; k < N; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < N; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == T(0)) return T(0);
        if (piv != k) {
            for (std::size_t j = 0; j < N; ++j) std::swap(a(k, j), a(piv, j));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < N; ++i) {
            const T f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < N; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

template <class T, std::size_t N>
Mat<T, N> inverse(Mat<T, N> a) {
    Mat<T, N> inv = Mat<T, N>::identity();
    const double scale = max_abs(a);
    for (std::size_t k = 0; k < N; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < N; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (!(std::abs(a(piv, k)) > 1e-300 + 1e-15 * scale))
            throw Error(ErrorKind::Numerical, "inverse: singular matrix");
        if (piv != k)
            for (std::size_t j = 0; j < N; ++j) {
                std::swap(a(k, j), a(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        const T p = a(k, k);
        for (std::size_t j = 0; j < N; ++j) {
            a(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < N; ++i) {
            if (i == k) continue;
            const T f = a(i, k);
            if (f == T(0)) continue;
            for (std::size_t j = 0; j < N; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// ---- tolerance ----

class Tolerance {
public:
    Tolerance() = default;
    Tolerance(double abs, double rel);

    double abs() const { return abs_; }
    double rel() const { return rel_; }

    // residual <= abs + rel * scale
    bool accepts(double residual, double scale = 0.0) const { return residual <= abs_ + rel_ * scale; }

private:
    double abs_ = 1e-12;
    double rel_ = 1e-10;
};

// ---- series exponential oracle ----

inline constexpr int kSeriesMaxTerms = 200;

// Truncated power series. Stops once the tail bound e^{|X|} |X|^{k+1}/(k+1)!
// (plain Frobenius norm) drops below tol.abs().
template <class T, std::size_t N>
Mat<T, N> series_exp(const Mat<T, N>& x, const Tolerance& tol = {}) {
    require_finite(x, "series_exp");
    const double nx = frobenius(x);
    const double grow = std::exp(nx);
    Mat<T, N> sum = Mat<T, N>::identity();
    Mat<T, N> term = sum;
    double tail = grow * nx;  // e^{|X|} |X|^{k+1} / (k+1)! at k = 0
    for (int k = 1; k <= kSeriesMaxTerms; ++k) {
        if (tail < tol.abs()) return sum;
        term = (term * x) / scalar_of<T>(double(k));
        sum += term;
        tail *= nx / double(k + 1);
    }
    if (tail < tol.abs()) return sum;
    throw Error(ErrorKind::Numerical, "series_exp: no convergence within term cap");
}

// ---- metric utilities ----

// diag(1, -1, -1, -1)
Mat4 metric();

// G M^T G
Mat4 g_transpose(const Mat4& m);

// V(h) with V(h) u = u x h.
Mat3 cross_matrix(const Vec3& h);

// I + (t - 1) u u^T
Mat3 slider(const Vec3& u, double t, const Tolerance& tol = {});

struct GOrthoCheck {
    bool ok;
    double residual;
};

// residual = |g_transpose(M) M - I| in the normalized norm, accepted when
// residual <= tol.abs + tol.rel * |M|^2.
GOrthoCheck is_g_orthogonal(const Mat4& m, const Tolerance& tol = {});

// (e1, e2) with (e1, e2, n) a right-handed orthonormal frame for unit n.
// e1 comes from the first standard basis vector not nearly parallel to n.
std::pair<Vec3, Vec3> orthonormal_complement(const Vec3& n);

// diag-block(1, R)
Mat4 embed_spatial(const Mat3& r);
Mat3 spatial_block(const Mat4& m);

}  // namespace lorentz
