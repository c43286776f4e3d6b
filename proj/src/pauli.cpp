#include "lorentz/pauli.hpp"

#include <cmath>

#include "lorentz/lorentz_exp.hpp"

namespace lorentz {

namespace {

const cplx I1(0.0, 1.0);

const std::array<Mat2c, 4>& sigmas() {
    static const std::array<Mat2c, 4> s = {
        Mat2c{{1.0, 0.0, 0.0, 1.0}},
        Mat2c{{0.0, 1.0, 1.0, 0.0}},
        Mat2c{{0.0, -I1, I1, 0.0}},
        Mat2c{{1.0, 0.0, 0.0, -1.0}},
    };
    return s;
}

double det_scale(const PauliVec& p) { return std::max(1.0, std::norm(p.gamma) + std::pow(norm(p.c), 2)); }

void require_unimodular(const PauliVec& p, const Tolerance& tol, const char* what) {
    const double res = std::abs(pv_det(p) - 1.0);
    if (!tol.accepts(res, det_scale(p))) throw Error(ErrorKind::Domain, std::string(what) + ": det != 1", res);
}

// cosh(sqrt(u)) and sinh(sqrt(u))/sqrt(u); both even in sqrt(u).
std::pair<cplx, cplx> cosh_sinhc(cplx u) {
    if (std::abs(u) < 1e-8) {
        const cplx ch = 1.0 + u / 2.0 * (1.0 + u / 12.0 * (1.0 + u / 30.0));
        const cplx sh = 1.0 + u / 6.0 * (1.0 + u / 20.0 * (1.0 + u / 42.0));
        return {ch, sh};
    }
    const cplx z = std::sqrt(u);
    return {std::cosh(z), std::sinh(z) / z};
}

// arccosh(1 + u) / sqrt(u (2 + u)), analytic at u = 0.
cplx acosh_ratio_series(cplx u) {
    static constexpr double k[] = {1.0,          -1.0 / 3.0,    2.0 / 15.0,   -2.0 / 35.0,
                                   8.0 / 315.0,  -8.0 / 693.0,  16.0 / 3003.0};
    cplx r = k[6];
    for (int i = 5; i >= 0; --i) r = r * u + k[i];
    return r;
}

Vec4 lift(double s, const Vec3& x) { return {{s, x[0], x[1], x[2]}}; }

}  // namespace

Mat2c encode(const Vec4c& x) {
    // [[x0 + x3, x1 - i x2], [x1 + i x2, x0 - x3]]
    return {{x[0] + x[3], x[1] - I1 * x[2], x[1] + I1 * x[2], x[0] - x[3]}};
}

Vec4c decode(const Mat2c& m) {
    Vec4c x;
    for (std::size_t k = 0; k < 4; ++k) x[k] = 0.5 * trace(sigmas()[k] * m);
    return x;
}

Vec4c to_vec4(const PauliVec& p) { return {{p.gamma, p.c[0], p.c[1], p.c[2]}}; }

PauliVec from_vec4(const Vec4c& x) { return {x[0], {{x[1], x[2], x[3]}}}; }

PauliVec pv_mul(const PauliVec& p, const PauliVec& q) {
    PauliVec r;
    r.gamma = p.gamma * q.gamma + dot(p.c, q.c);
    r.c = q.c * p.gamma + p.c * q.gamma + cross(p.c, q.c) * I1;
    return r;
}

PauliVec operator*(const PauliVec& p, cplx z) { return {p.gamma * z, p.c * z}; }

PauliVec operator-(const PauliVec& p) { return {-p.gamma, -p.c}; }

cplx pv_det(const PauliVec& p) { return p.gamma * p.gamma - dot(p.c, p.c); }

PauliVec pv_inv_unimodular(const PauliVec& p, const Tolerance& tol) {
    require_unimodular(p, tol, "pv_inv_unimodular");
    return {p.gamma, -p.c};
}

Mat4 jaws_direct(const PauliVec& p) {
    const Mat2c c = encode(to_vec4(p));
    const Mat2c cs = adjoint(c);
    Mat4 l;
    for (std::size_t k = 0; k < 4; ++k) {
        const Mat2c img = c * sigmas()[k] * cs;
        for (std::size_t j = 0; j < 4; ++j) l(j, k) = 0.5 * trace(sigmas()[j] * img).real();
    }
    return l;
}

Mat4 jaws_closed(const PauliVec& p) {
    const double al = p.alpha(), be = p.beta();
    const Vec3 a = p.a(), b = p.b();
    const double aa = dot(a, a), bb = dot(b, b);
    const Vec3 sym = a * al + b * be;
    const Vec3 axb = cross(a, b);

    Mat4 l = embed_spatial(Mat3::identity() * (al * al + be * be - aa - bb) +
                           (outer(a, a) + outer(b, b) + cross_matrix(b) * al - cross_matrix(a) * be) * 2.0);
    l(0, 0) = al * al + be * be + aa + bb;
    for (std::size_t i = 0; i < 3; ++i) {
        l(i + 1, 0) = 2.0 * (sym[i] + axb[i]);
        l(0, i + 1) = 2.0 * (sym[i] - axb[i]);
    }
    return l;
}

PauliVec sign_normalize(const PauliVec& p) {
    const auto flip = [&] { return -p; };
    if (p.gamma.real() > 0.0) return p;
    if (p.gamma.real() < 0.0) return flip();
    if (p.gamma.imag() > 0.0) return p;
    if (p.gamma.imag() < 0.0) return flip();
    for (std::size_t k = 0; k < 3; ++k) {
        if (p.c[k].real() != 0.0) return p.c[k].real() > 0.0 ? p : flip();
        if (p.c[k].imag() != 0.0) return p.c[k].imag() > 0.0 ? p : flip();
    }
    return p;
}

SpinPair lorentz_to_spin(const LorentzMat& l, const Tolerance& tol) {
    if (!l.proper()) throw Error(ErrorKind::Domain, "lorentz_to_spin: improper Lorentz matrix");
    const PolarUP up = polar(l, tol);
    SpinPair sp;
    const double half = 0.5 * up.angle;
    sp.rotation = {std::cos(half), to_complex(up.axis) * cplx(0.0, -std::sin(half))};
    // sqrt((s - 1)/2) v = q / sqrt(2 (s + 1))
    sp.boost = {std::sqrt(0.5 * (up.s + 1.0)), to_complex(l.q() / std::sqrt(2.0 * (up.s + 1.0)))};
    const PauliVec m = sp.rotation * sp.boost;
    sp.m = sign_normalize(m);
    if (!(sp.m == m)) sp.rotation = -sp.rotation;
    return sp;
}

PauliVec spin_exp(const Vec3c& w) {
    require_finite(w, "spin_exp");
    const auto [ch, sh] = cosh_sinhc(dot(w, w));
    return {ch, w * sh};
}

std::string_view to_string(SpinBranch b) {
    switch (b) {
        case SpinBranch::Diagonalizable: return "Diagonalizable";
        case SpinBranch::Defective: return "Defective";
        case SpinBranch::Identity: return "Identity";
    }
    return "Unknown";
}

SpinLog spin_log(const PauliVec& m_in, const Tolerance& tol) {
    require_finite(to_vec4(m_in), "spin_log");
    require_unimodular(m_in, tol, "spin_log");
    const PauliVec m = sign_normalize(m_in);
    const double nc = norm(m.c);
    SpinLog out;

    if (tol.accepts(nc, 1.0)) {
        out.w = Vec3c{};
        out.branch = SpinBranch::Identity;
        out.z0 = 0.0;
        return out;
    }

    const cplx cc = dot(m.c, m.c);
    if (tol.accepts(std::abs(cc), nc * nc)) {
        if (std::abs(m.gamma - 1.0) > 1e-6)
            throw Error(ErrorKind::Domain, "spin_log: nilpotent part with gamma = -1", std::abs(m.gamma - 1.0));
        out.w = m.c * 2.0;
        out.branch = SpinBranch::Defective;
        return out;
    }

    // gamma^2 - 1 = c.c on the unimodular set; the latter has no cancellation near gamma = 1.
    const cplx s0 = std::sqrt(cc);
    const cplx z0 = std::log(m.gamma + s0);
    const cplx u = m.gamma - 1.0;
    const cplx ratio = std::abs(u) < 1e-3 ? acosh_ratio_series(u) : z0 / s0;
    out.w = m.c * (2.0 * ratio);
    out.branch = SpinBranch::Diagonalizable;
    out.z0 = z0;
    return out;
}

MaxwellGen lorentz_log(const LorentzMat& l, const Tolerance& tol) {
    const SpinPair sp = lorentz_to_spin(l, tol);
    const SpinLog sl = spin_log(sp.m, tol);
    const MaxwellGen f = build(real_part(sl.w), imag_part(sl.w));
    const double res = norm(exp_maxwell(f, 1.0) - l.matrix());
    if (res > 1e-8 * std::max(1.0, norm(l.matrix())))
        throw Error(ErrorKind::Numerical, "lorentz_log: round trip residual too large", res);
    return f;
}

DefectiveInfo defective_analysis(const PauliVec& m, const Tolerance& tol) {
    require_unimodular(m, tol, "defective_analysis");
    DefectiveInfo info;
    const double nc = norm(m.c);
    const cplx cc = dot(m.c, m.c);
    if (tol.accepts(nc, 1.0) || !tol.accepts(std::abs(cc), nc * nc)) return info;

    info.defective = true;
    const Vec3c w = m.c / m.gamma;
    const Vec3 a = normalized(real_part(w));
    const Vec3 b = normalized(imag_part(w));
    const double h = 1.0 / std::sqrt(2.0);
    info.eigvec = to_complex(lift(h, cross(a, b) * h));
    info.span = {info.eigvec, to_complex(lift(0.0, b))};
    return info;
}

}  // namespace lorentz
