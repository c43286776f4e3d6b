#include "lorentz/lorentz_exp.hpp"

#include <cmath>

namespace lorentz {

namespace {

constexpr double kSeriesSwitch = 1e-4;

// Below this multiple of max(|d|, |h|, 1), sqrt(sigma^2 + theta^2) counts as
// zero and the nilpotent polynomial is used.
constexpr double kNilpotentSwitch = 1e-7;

template <std::size_t N>
Mat<double, N> exp_idem3_impl(const Mat<double, N>& z, double c, double t, const Tolerance& tol) {
    require_finite(z, "exp_idem3");
    if (!std::isfinite(c) || !std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "exp_idem3: non-finite input");
    const Mat<double, N> z2 = z * z;
    const double nz = norm(z);
    const double res = norm(z2 * z - z * c);
    if (!tol.accepts(res, nz * nz * nz + std::abs(c) * nz))
        throw Error(ErrorKind::InvalidArgument, "exp_idem3: Z^3 != cZ", res);

    const Mat<double, N> id = Mat<double, N>::identity();
    if (c < 0.0) {
        const double a = std::sqrt(-c);
        return id + z * (t * sinc(a * t)) + z2 * (t * t * cosc(a * t));
    }
    if (c > 0.0) {
        const double a = std::sqrt(c);
        return id + z * (t * sinhc(a * t)) + z2 * (t * t * coshc(a * t));
    }
    return id + z * t + z2 * (t * t / 2.0);
}

}  // namespace

double sinc(double x) {
    if (std::abs(x) < kSeriesSwitch) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
    }
    return std::sin(x) / x;
}

double cosc(double x) {
    if (std::abs(x) < kSeriesSwitch) {
        const double x2 = x * x;
        return 0.5 - x2 / 24.0 * (1.0 - x2 / 30.0 * (1.0 - x2 / 56.0));
    }
    // 1 - cos x = 2 sin^2(x/2)
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s / (x * x);
}

double sinhc(double x) {
    if (std::abs(x) < kSeriesSwitch) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0));
    }
    return std::sinh(x) / x;
}

double coshc(double x) {
    if (std::abs(x) < kSeriesSwitch) {
        const double x2 = x * x;
        return 0.5 + x2 / 24.0 * (1.0 + x2 / 30.0 * (1.0 + x2 / 56.0));
    }
    // cosh x - 1 = 2 sinh^2(x/2)
    const double s = std::sinh(0.5 * x);
    return 2.0 * s * s / (x * x);
}

Mat4 exp_idem3(const Mat4& z, double c, double t, const Tolerance& tol) { return exp_idem3_impl(z, c, t, tol); }

Mat3 exp_idem3(const Mat3& z, double c, double t, const Tolerance& tol) { return exp_idem3_impl(z, c, t, tol); }

Mat3 rotation3(const Vec3& axis, double theta, const Tolerance& tol) {
    require_finite(axis, "rotation3");
    if (!std::isfinite(theta)) throw Error(ErrorKind::InvalidArgument, "rotation3: non-finite angle");
    const double len = norm(axis);
    if (!tol.accepts(std::abs(len - 1.0), 1.0))
        throw Error(ErrorKind::InvalidArgument, "rotation3: axis is not a unit vector", std::abs(len - 1.0));
    const Mat3 v = cross_matrix(axis);
    return Mat3::identity() - v * std::sin(theta) + (v * v) * (1.0 - std::cos(theta));
}

Mat4 exp_maxwell(const MaxwellGen& f, double t) {
    if (!std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "exp_maxwell: non-finite parameter");
    const Mat4 id = Mat4::identity();
    if (f.is_zero()) return id;

    const EigenParams ep = eigen_params(f);
    const double scale = std::max({norm(f.d()), norm(f.h()), 1.0});
    const Mat4& fm = f.matrix();
    if (std::sqrt(ep.norm2) < kNilpotentSwitch * scale) return id + fm * t + (fm * fm) * (t * t / 2.0);

    const double p = dot(f.d(), f.h());
    const Mat4 ft = skew_conjugate(f).matrix();
    const Mat4 x = (fm * (ep.sigma * ep.sigma) + ft * p) / ep.norm2;
    const Mat4 y = (fm * (ep.theta * ep.theta) - ft * p) / ep.norm2;
    const double ts = t * ep.sigma, tt = t * ep.theta;
    return id + x * (t * sinhc(ts)) + (x * x) * (t * t * coshc(ts)) + y * (t * sinc(tt)) +
           (y * y) * (t * t * cosc(tt));
}

PredictedScalars predicted_scalars(const MaxwellGen& f, double t, const Tolerance& tol) {
    const EigenParams ep = eigen_params(f);
    if (!tol.accepts(std::abs(ep.norm2 - 1.0), 1.0))
        throw Error(ErrorKind::InvalidArgument, "predicted_scalars: generator not normalized",
                    std::abs(ep.norm2 - 1.0));
    const double dd = dot(f.d(), f.d());
    const double ct = std::cos(t * ep.theta), ch = std::cosh(t * ep.sigma);
    const double s2 = ep.sigma * ep.sigma, t2 = ep.theta * ep.theta;
    return {1.0 + (1.0 - ct) * (dd - s2) + (ch - 1.0) * (dd + t2), 2.0 * (ct + ch)};
}

}  // namespace lorentz
