#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "lorentz/core4.hpp"
#include "lorentz/lorentz_exp.hpp"
#include "lorentz/maxwell.hpp"
#include "lorentz/pauli.hpp"

namespace testing {

using namespace lorentz;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234ULL);
    return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Vec3 rand3(double r = 2.0) { return {{uniform(-r, r), uniform(-r, r), uniform(-r, r)}}; }

inline Vec3 rand_unit3() {
    for (;;) {
        const Vec3 v = rand3(1.0);
        const double n = norm(v);
        if (n > 0.1 && n <= 1.0) return v / n;
    }
}

inline Vec3c rand3c(double r = 1.0) { return to_complex(rand3(r)) + to_complex(rand3(r)) * cplx(0.0, 1.0); }

inline MaxwellGen rand_gen(double r = 2.0) { return build(rand3(r), rand3(r)); }

inline PauliVec rand_pauli(double r = 1.0) { return {cplx(uniform(-r, r), uniform(-r, r)), rand3c(r)}; }

// det = 1 by rescaling with a square root of the determinant.
inline PauliVec rand_unimodular(double r = 1.0) {
    for (;;) {
        const PauliVec p = rand_pauli(r);
        const cplx d = pv_det(p);
        if (std::abs(d) > 0.05) return p * (1.0 / std::sqrt(d));
    }
}

// d perpendicular to h, |d| = |h| = k.
inline MaxwellGen rand_hyper(double k) {
    const Vec3 h = rand_unit3();
    const auto [e1, e2] = orthonormal_complement(h);
    const double a = uniform(0.0, 2.0 * M_PI);
    return build((e1 * std::cos(a) + e2 * std::sin(a)) * k, h * k);
}

// Proper Lorentz matrix with bounded generator.
inline Mat4 rand_lorentz(double r = 1.0) { return exp_maxwell(rand_gen(r), 1.0); }

// ---- oracles ----

// Roots of the characteristic polynomial x^4 - (d^2 - h^2) x^2 - (d.h)^2.
inline std::vector<cplx> biquadratic_roots(const Vec3& d, const Vec3& h) {
    const double b = dot(d, d) - dot(h, h), c = -std::pow(dot(d, h), 2);
    const cplx disc = std::sqrt(cplx(b * b - 4.0 * c));
    const cplx y1 = (b + disc) / 2.0, y2 = (b - disc) / 2.0;
    return {std::sqrt(y1), -std::sqrt(y1), std::sqrt(y2), -std::sqrt(y2)};
}

// Lagrange interpolation projector onto the eigenspace of lambda_k.
inline Mat4c lagrange_projector(const Mat4& f, const std::array<cplx, 4>& lam, std::size_t k) {
    Mat4c p = Mat4c::identity();
    const Mat4c fc = to_complex(f);
    for (std::size_t j = 0; j < 4; ++j) {
        if (j == k) continue;
        p = p * ((fc - Mat4c::identity() * lam[j]) / (lam[k] - lam[j]));
    }
    return p;
}

// X = a F + b F^3 acting as F on the real eigenvalues and as 0 on the
// imaginary ones: a + b sigma^2 = 1, a - b theta^2 = 0.
inline std::pair<Mat4, Mat4> xy_linear_solve(const Mat4& f, double sigma, double theta) {
    const double det = -theta * theta - sigma * sigma;
    const double a = (-theta * theta) / det;
    const double b = (-1.0) / det;
    const Mat4 f3 = f * f * f;
    const Mat4 x = f * a + f3 * b;
    return {x, f - x};
}

inline Mat2c series_exp2(const Mat2c& m) { return series_exp(m, Tolerance(1e-18, 1e-10)); }

template <class T, std::size_t N>
double max_diff(const Mat<T, N>& a, const Mat<T, N>& b) {
    return max_abs(a - b);
}

template <class T, std::size_t N>
double max_diff(const Vec<T, N>& a, const Vec<T, N>& b) {
    return max_abs(a - b);
}

inline double max_diff(const PauliVec& a, const PauliVec& b) {
    return std::max(std::abs(a.gamma - b.gamma), max_abs(a.c - b.c));
}

}  // namespace testing
