#include "lorentz/maxwell.hpp"

#include <cmath>

namespace lorentz {

MaxwellGen build(const Vec3& d, const Vec3& h) {
    require_finite(d, "build: d");
    require_finite(h, "build: h");
    MaxwellGen f;
    f.d_ = d;
    f.h_ = h;
    const Mat3 v = cross_matrix(h);
    for (std::size_t i = 0; i < 3; ++i) {
        f.m_(0, i + 1) = d[i];
        f.m_(i + 1, 0) = d[i];
        for (std::size_t j = 0; j < 3; ++j) f.m_(i + 1, j + 1) = v(i, j);
    }
    f.zero_ = max_abs(d) == 0.0 && max_abs(h) == 0.0;
    return f;
}

MaxwellGen skew_conjugate(const MaxwellGen& f) { return build(f.h(), -f.d()); }

MaxwellGen scaled(const MaxwellGen& f, double k) { return build(f.d() * k, f.h() * k); }

MaxwellGen from_matrix(const Mat4& m) {
    Vec3 d, h;
    for (std::size_t i = 0; i < 3; ++i) d[i] = 0.5 * (m(0, i + 1) + m(i + 1, 0));
    h[0] = 0.5 * (m(2, 3) - m(3, 2));
    h[1] = 0.5 * (m(3, 1) - m(1, 3));
    h[2] = 0.5 * (m(1, 2) - m(2, 1));
    return build(d, h);
}

EigenParams eigen_params(const MaxwellGen& f) {
    const Vec3& d = f.d();
    const Vec3& h = f.h();
    const double dd = dot(d, d), hh = dot(h, h);
    const double D = dd - hh;
    const double P = dot(d, h);
    const double r = std::hypot(D, 2.0 * P);

    // Take the cancellation-free root first; the other follows from s2 * t2 = P^2.
    double s2, t2;
    if (D >= 0.0) {
        s2 = 0.5 * (D + r);
        t2 = s2 > 0.0 ? P * P / s2 : 0.0;
    } else {
        t2 = 0.5 * (r - D);
        s2 = t2 > 0.0 ? P * P / t2 : 0.0;
    }
    EigenParams ep;
    ep.sigma = std::sqrt(s2);
    ep.theta = P < 0.0 ? -std::sqrt(t2) : std::sqrt(t2);
    ep.zeta = norm(cross(d, h));
    ep.norm2 = s2 + t2;
    return ep;
}

std::string_view to_string(GenClass c) {
    switch (c) {
        case GenClass::Zero: return "Zero";
        case GenClass::Regular: return "Regular";
        case GenClass::BoostLike: return "BoostLike";
        case GenClass::RotationLike: return "RotationLike";
        case GenClass::Parallel: return "Parallel";
        case GenClass::HyperSingular: return "HyperSingular";
    }
    return "Unknown";
}

Classification classify(const MaxwellGen& f, const Tolerance& tol) {
    Classification c;
    const double nd = norm(f.d()), nh = norm(f.h());
    const double scale = std::max(nd, nh);
    if (f.is_zero()) {
        c.kind = GenClass::Zero;
        c.d_zero = c.h_zero = true;
        return c;
    }
    const double r = tol.rel();
    c.d_zero = nd <= r * scale;
    c.h_zero = nh <= r * scale;
    const EigenParams ep = eigen_params(f);
    const double p = dot(f.d(), f.h());

    if (std::abs(nd - nh) <= r * scale && std::abs(p) <= r * scale * scale)
        c.kind = GenClass::HyperSingular;
    else if (!c.d_zero && !c.h_zero && ep.zeta <= r * nd * nh)
        c.kind = GenClass::Parallel;
    else if (std::abs(ep.theta) <= r * scale)
        c.kind = GenClass::BoostLike;
    else if (ep.sigma <= r * scale)
        c.kind = GenClass::RotationLike;
    else
        c.kind = GenClass::Regular;
    return c;
}

namespace {

void require_nonsingular_sum(const MaxwellGen& f, const Tolerance& tol, const char* what) {
    const GenClass k = classify(f, tol).kind;
    if (k == GenClass::Zero || k == GenClass::HyperSingular)
        throw Error(ErrorKind::Domain, std::string(what) + ": generator is zero or hyper-singular");
}

Vec4 lift(double s, const Vec3& x) { return {{s, x[0], x[1], x[2]}}; }

Vec4c lift(cplx s, const Vec3c& x) { return {{s, x[0], x[1], x[2]}}; }

// +i|h| owns (0, e1 + i e2) for (e1, e2, h^) right-handed.
void push_rotation_pair(std::vector<EigenPair>& out, const Vec3& axis, double rate) {
    const auto [e1, e2] = orthonormal_complement(axis);
    const Vec3c w = to_complex(e1) + to_complex(e2) * cplx(0.0, 1.0);
    const Vec4c v = lift(cplx(0.0), w);
    out.push_back({cplx(0.0, rate), canonical_phase(v)});
    out.push_back({cplx(0.0, -rate), canonical_phase(conj(v))});
}

}  // namespace

MaxwellGen normalize(const MaxwellGen& f) {
    require_nonsingular_sum(f, Tolerance{}, "normalize");
    return scaled(f, 1.0 / std::sqrt(eigen_params(f).norm2));
}

SplitZ split_z(const MaxwellGen& f, const Tolerance& tol) {
    require_nonsingular_sum(f, tol, "split_z");
    const EigenParams ep = eigen_params(f);
    const double n = std::sqrt(ep.norm2);
    const Mat4 fh = f.matrix() / n;
    const Mat4 fth = skew_conjugate(f).matrix() / n;
    const double s = ep.sigma / n, t = ep.theta / n;
    return {fh * t - fth * s, fh * s + fth * t};
}

OrthoXY ortho_xy(const MaxwellGen& f, const Tolerance& tol) {
    require_nonsingular_sum(f, tol, "ortho_xy");
    const EigenParams ep = eigen_params(f);
    const double p = dot(f.d(), f.h());
    const Mat4& fm = f.matrix();
    const Mat4 ft = skew_conjugate(f).matrix();
    // theta^2 F + F^3 and sigma^2 F - F^3 with F^3 reduced through F Ft = (d.h) I.
    const Mat4 x = (fm * (ep.sigma * ep.sigma) + ft * p) / ep.norm2;
    const Mat4 y = (fm * (ep.theta * ep.theta) - ft * p) / ep.norm2;
    return {x, y};
}

std::array<Mat4c, 4> spectral_projections(const MaxwellGen& f, const Tolerance& tol) {
    const EigenParams ep = eigen_params(f);
    if (!tol.accepts(std::abs(ep.norm2 - 1.0), 1.0))
        throw Error(ErrorKind::InvalidArgument, "spectral_projections: generator not normalized",
                    std::abs(ep.norm2 - 1.0));
    const GenClass k = classify(f, tol).kind;
    if (k != GenClass::Regular && k != GenClass::Parallel)
        throw Error(ErrorKind::Domain, "spectral_projections: singular generator");

    const double s = ep.sigma, t = ep.theta;
    const Mat4 fm = f.matrix();
    const Mat4 ft = skew_conjugate(f).matrix();
    const Mat4 f2 = fm * fm;
    const Mat4 id = Mat4::identity();
    const Mat4 real_a = (id * (t * t) + f2) * 0.5;
    const Mat4 real_b = (fm * s + ft * t) * 0.5;
    const Mat4 rot_a = (id * (s * s) - f2) * 0.5;
    const Mat4 rot_b = (fm * t - ft * s) * 0.5;

    const cplx i(0.0, 1.0);
    return {to_complex(real_a + real_b), to_complex(real_a - real_b),
            to_complex(rot_a) - to_complex(rot_b) * i, to_complex(rot_a) + to_complex(rot_b) * i};
}

Vec4c canonical_phase(const Vec4c& v) {
    const double n = norm(v);
    if (n == 0.0) return v;
    Vec4c u = v / cplx(n);
    for (std::size_t i = 0; i < 4; ++i) {
        const double a = std::abs(u[i]);
        if (a > 1e-12) return u * (std::conj(u[i]) / a);
    }
    return u;
}

std::vector<EigenPair> eigenvectors(const MaxwellGen& f, const Tolerance& tol) {
    const Classification cls = classify(f, tol);
    std::vector<EigenPair> out;
    out.reserve(4);

    if (cls.kind == GenClass::Zero) {
        for (std::size_t k = 0; k < 4; ++k) {
            Vec4c e{};
            e[k] = 1.0;
            out.push_back({0.0, e});
        }
        return out;
    }

    const Vec3& d = f.d();
    const Vec3& h = f.h();
    const EigenParams ep = eigen_params(f);

    if (cls.kind == GenClass::HyperSingular) {
        const double nh = norm(h);
        out.push_back({0.0, canonical_phase(to_complex(lift(0.0, h / nh)))});
        out.push_back({0.0, canonical_phase(to_complex(lift(nh * nh, cross(d, h))))});
        return out;
    }

    if (cls.kind == GenClass::Parallel || (cls.kind == GenClass::BoostLike && cls.h_zero)) {
        const Vec3 dh = d / norm(d);
        const double s = ep.sigma;
        out.push_back({s, canonical_phase(to_complex(lift(1.0, dh)))});
        out.push_back({-s, canonical_phase(to_complex(lift(-1.0, dh)))});
        if (cls.kind == GenClass::Parallel) {
            push_rotation_pair(out, h / norm(h), norm(h));
        } else {
            const auto [e1, e2] = orthonormal_complement(dh);
            out.push_back({0.0, canonical_phase(to_complex(lift(0.0, e1)))});
            out.push_back({0.0, canonical_phase(to_complex(lift(0.0, e2)))});
        }
        return out;
    }

    if (cls.kind == GenClass::RotationLike && cls.d_zero) {
        const Vec3 hh = h / norm(h);
        out.push_back({0.0, canonical_phase(to_complex(lift(1.0, Vec3{})))});
        out.push_back({0.0, canonical_phase(to_complex(lift(0.0, hh)))});
        push_rotation_pair(out, hh, norm(h));
        return out;
    }

    // Frame built from h^ and d x h, in units where |h| = 1.
    const double nh = norm(h);
    const Vec3 hu = h / nh;
    const Vec3 dp = d / nh;
    const double sp = ep.sigma / nh, tp = ep.theta / nh;
    const Vec3 w3 = cross(dp, hu);   // zeta' v3
    const Vec3 w2 = cross(w3, hu);   // zeta' v2
    const double zp2 = dot(w3, w3);  // zeta'^2 = (1 - tp^2)(1 + sp^2)
    const double k = 1.0 / (1.0 + sp * sp);
    const double one_minus_t2 = zp2 * k;

    // +-sigma: (1, k w3) +- (0, tp hu - sp k w2)
    const Vec3 base = w3 * k;
    const Vec3 swing = hu * tp - w2 * (sp * k);
    out.push_back({ep.sigma, canonical_phase(to_complex(lift(1.0, base + swing)))});
    out.push_back({-ep.sigma, canonical_phase(to_complex(lift(1.0, base - swing)))});

    // +-i theta: (1 - tp^2, w3) -+ i (0, sp (1 - tp^2) hu + tp w2)
    const Vec4c re = to_complex(lift(one_minus_t2, w3));
    const Vec4c im = to_complex(lift(0.0, hu * (sp * one_minus_t2) + w2 * tp));
    const cplx i(0.0, 1.0);
    out.push_back({cplx(0.0, ep.theta), canonical_phase(re - im * i)});
    out.push_back({cplx(0.0, -ep.theta), canonical_phase(re + im * i)});
    return out;
}

}  // namespace lorentz
