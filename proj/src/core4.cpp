#include "lorentz/core4.hpp"

#include <limits>

namespace lorentz {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::NotLorentz: return "not-lorentz";
        case ErrorKind::Numerical: return "numerical";
    }
    return "unknown";
}

Tolerance::Tolerance(double abs, double rel) : abs_(abs), rel_(rel) {
    if (!std::isfinite(abs) || !std::isfinite(rel) || abs < 0.0 || rel < 0.0)
        throw Error(ErrorKind::InvalidArgument, "tolerance components must be finite and non-negative");
    if (abs == 0.0 && rel == 0.0) throw Error(ErrorKind::InvalidArgument, "tolerance must not be identically zero");
}

Mat4 metric() {
    Mat4 g;
    g(0, 0) = 1.0;
    g(1, 1) = g(2, 2) = g(3, 3) = -1.0;
    return g;
}

Mat4 g_transpose(const Mat4& m) {
    static constexpr double sign[4] = {1.0, -1.0, -1.0, -1.0};
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(i, j) = sign[i] * sign[j] * m(j, i);
    return r;
}

Mat3 cross_matrix(const Vec3& h) {
    return {{0.0, h[2], -h[1],  //
             -h[2], 0.0, h[0],  //
             h[1], -h[0], 0.0}};
}

Mat3 slider(const Vec3& u, double t, const Tolerance& tol) {
    require_finite(u, "slider");
    if (!std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "slider: non-finite parameter");
    const double len = norm(u);
    if (!tol.accepts(std::abs(len - 1.0), 1.0))
        throw Error(ErrorKind::InvalidArgument, "slider: direction is not a unit vector", std::abs(len - 1.0));
    return Mat3::identity() + outer(u, u) * (t - 1.0);
}

GOrthoCheck is_g_orthogonal(const Mat4& m, const Tolerance& tol) {
    if (!all_finite(m)) return {false, std::numeric_limits<double>::infinity()};
    const double res = norm(g_transpose(m) * m - Mat4::identity());
    const double nm = norm(m);
    return {tol.accepts(res, nm * nm), res};
}

std::pair<Vec3, Vec3> orthonormal_complement(const Vec3& n) {
    for (std::size_t k = 0; k < 3; ++k) {
        Vec3 e{};
        e[k] = 1.0;
        const Vec3 w = e - n * dot(e, n);
        const double len = norm(w);
        if (len > 0.5) {
            const Vec3 e1 = w / len;
            return {e1, cross(n, e1)};
        }
    }
    throw Error(ErrorKind::InvalidArgument, "orthonormal_complement: axis is not a unit vector");
}

Mat4 embed_spatial(const Mat3& r) {
    Mat4 m;
    m(0, 0) = 1.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i + 1, j + 1) = r(i, j);
    return m;
}

Mat3 spatial_block(const Mat4& m) {
    Mat3 a;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = m(i + 1, j + 1);
    return a;
}

}  // namespace lorentz
