#include "lorentz/lorentz_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lorentz {

namespace {

double g_inner(const Vec4& x, const Vec4& y) { return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3]; }

Vec4 lift(double s, const Vec3& x) { return {{s, x[0], x[1], x[2]}}; }

double residual(const Mat4& m, cplx value, const Vec4c& v) {
    return norm(to_complex(m) * v - v * value);
}

// Real root of largest modulus of x^3 - c2 x^2 + c1 x - c0.
double largest_real_root(double c2, double c1, double c0) {
    // Depressed cubic y^3 + p y + q with x = y + c2 / 3.
    const double sh = c2 / 3.0;
    const double p = c1 - c2 * c2 / 3.0;
    const double q = -2.0 * c2 * c2 * c2 / 27.0 + c2 * c1 / 3.0 - c0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;
    double x;
    if (disc > 0.0) {
        const double sq = std::sqrt(disc);
        x = std::cbrt(-q / 2.0 + sq) + std::cbrt(-q / 2.0 - sq) + sh;
    } else {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        x = sh;
        double best = -1.0;
        for (int k = 0; k < 3; ++k) {
            const double r = m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) + sh;
            if (std::abs(r) > best) {
                best = std::abs(r);
                x = r;
            }
        }
    }
    for (int it = 0; it < 3; ++it) {
        const double f = ((x - c2) * x + c1) * x - c0;
        const double df = (3.0 * x - 2.0 * c2) * x + c1;
        if (df == 0.0) break;
        x -= f / df;
    }
    return x;
}

// Unit vector spanning the kernel of a rank-2 3x3 matrix.
Vec3 kernel3(const Mat3& m) {
    const Vec3 r0{{m(0, 0), m(0, 1), m(0, 2)}};
    const Vec3 r1{{m(1, 0), m(1, 1), m(1, 2)}};
    const Vec3 r2{{m(2, 0), m(2, 1), m(2, 2)}};
    Vec3 best = cross(r0, r1);
    for (const Vec3& c : {cross(r1, r2), cross(r2, r0)})
        if (norm(c) > norm(best)) best = c;
    const double n = norm(best);
    if (n == 0.0) return {{0.0, 0.0, 1.0}};
    return best / n;
}

struct Spectrum {
    double sigma;  // ln of the real eigenvalue >= 1
    double theta;  // phase of the unit-modulus pair, in [0, pi]
    double cosh_sigma;
};

// The G-skew part (L - L^-1)/2 = sinh(F) carries sinh(sigma) and sin(theta);
// the trace 2 cosh(sigma) + 2 cos(theta) fixes the quadrant of theta.
Spectrum spectrum_of(const Mat4& l) {
    const MaxwellGen k = from_matrix((l - g_transpose(l)) * 0.5);
    const EigenParams ep = eigen_params(k);
    const double sigma = std::asinh(ep.sigma);
    const double ch = std::sqrt(1.0 + ep.sigma * ep.sigma);
    const double cos_theta = std::clamp(0.5 * trace(l) - ch, -1.0, 1.0);
    const double theta = std::atan2(std::abs(ep.theta), cos_theta);
    return {sigma, theta, ch};
}

}  // namespace

LorentzMat validate(const Mat4& m, const Tolerance& tol) {
    require_finite(m, "validate");
    const Mat4 id = Mat4::identity();
    const Mat4 gt = g_transpose(m);
    const double res = std::max(norm(gt * m - id), norm(m * gt - id));
    const double nm = norm(m);
    if (!tol.accepts(res, nm * nm)) throw Error(ErrorKind::NotLorentz, "validate: matrix is not G-orthogonal", res);
    LorentzMat l;
    l.m_ = m;
    l.det_ = det(m);
    l.proper_ = l.det_ > 0.0 && m(0, 0) > 0.0;
    l.residual_ = res;
    return l;
}

double BlockResiduals::max() const { return std::max({at_p, a_q, at_a, a_at, lengths}); }

BlockResiduals block_residuals(const LorentzMat& l) {
    const double s = l.s();
    const Vec3 p = l.p(), q = l.q();
    const Mat3 a = l.a();
    const Mat3 id = Mat3::identity();
    BlockResiduals r;
    r.at_p = norm(transpose(a) * p - q * s);
    r.a_q = norm(a * q - p * s);
    r.at_a = norm(transpose(a) * a - outer(q, q) - id);
    r.a_at = norm(a * transpose(a) - outer(p, p) - id);
    r.lengths = std::max(std::abs(dot(p, p) - (s * s - 1.0)), std::abs(dot(q, q) - (s * s - 1.0)));
    return r;
}

Mat3 PolarUP::stretch() const { return Mat3::identity() + outer(v, v) * (s - 1.0); }

Mat4 PolarUP::rotation4() const { return embed_spatial(r); }

Mat4 PolarUP::boost4() const {
    Mat4 b = embed_spatial(stretch());
    b(0, 0) = s;
    for (std::size_t i = 0; i < 3; ++i) b(0, i + 1) = b(i + 1, 0) = t * v[i];
    return b;
}

PolarUP polar(const LorentzMat& l, const Tolerance& tol) {
    if (!l.proper()) throw Error(ErrorKind::Domain, "polar: improper Lorentz matrix");
    PolarUP up;
    up.s = l.s();
    const Vec3 q = l.q();
    up.t = norm(q);
    up.v = up.t > 0.0 ? q / up.t : Vec3{{1.0, 0.0, 0.0}};
    // A = R (I + q q^T / (s + 1)) and p = R q.
    up.r = l.a() - outer(l.p(), q) / (up.s + 1.0);
    up.u = up.r * up.v;
    const double grow = std::max(1.0, up.s * up.s);
    const AxisAngle aa = rotation_axis_angle(up.r, Tolerance(tol.abs() * grow, tol.rel() * grow));
    up.axis = aa.axis;
    up.angle = aa.angle;
    return up;
}

AxisAngle rotation_axis_angle(const Mat3& r, const Tolerance& tol) {
    require_finite(r, "rotation_axis_angle");
    const double orth = norm(transpose(r) * r - Mat3::identity());
    const double dres = std::abs(det(r) - 1.0);
    if (!tol.accepts(std::max(orth, dres), 1.0))
        throw Error(ErrorKind::InvalidArgument, "rotation_axis_angle: not a proper rotation", std::max(orth, dres));

    // R - R^T = -2 sin(rho) V(axis)
    const Vec3 w{{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)}};
    const double sin2 = norm(w);
    const double cos_rho = 0.5 * (trace(r) - 1.0);
    const double rho = std::atan2(0.5 * sin2, cos_rho);

    if (cos_rho >= 0.0) {
        if (sin2 == 0.0) return {{{0.0, 0.0, 1.0}}, 0.0};
        return {w / sin2, rho};
    }
    // Symmetric part minus cos(rho) I is (1 - cos rho) axis axis^T.
    Mat3 b = (r + transpose(r)) * 0.5;
    for (std::size_t i = 0; i < 3; ++i) b(i, i) -= cos_rho;
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (b(i, i) > b(k, k)) k = i;
    Vec3 axis{{b(0, k), b(1, k), b(2, k)}};
    axis = axis / norm(axis);
    if (dot(axis, w) < 0.0) axis = -axis;
    return {axis, rho};
}

GramEigen gram_eigen(const LorentzMat& l) {
    GramEigen g;
    const double s = l.s();
    const Vec3 q = l.q();
    const double t = norm(q);
    g.alpha = t;
    if (t == 0.0) {
        g.gamma = 1.0;
        g.values = {1.0, 1.0, 1.0, 1.0};
        for (std::size_t k = 0; k < 4; ++k) {
            g.vectors[k] = Vec4{};
            g.vectors[k][k] = 1.0;
        }
        return g;
    }
    const double st = s + t;
    g.gamma = st * st;
    g.values = {g.gamma, 1.0 / g.gamma, 1.0, 1.0};
    const Vec3 v = q / t;
    const double h = 1.0 / std::sqrt(2.0);
    const auto [e1, e2] = orthonormal_complement(v);
    g.vectors = {lift(h, v * h), lift(-h, v * h), lift(0.0, e1), lift(0.0, e2)};
    return g;
}

std::vector<Vec4c> null_space(const Mat4c& m, double rel) {
    Mat4c a = m;
    std::array<std::size_t, 4> col{0, 1, 2, 3};
    const double thr = rel * norm(m);
    std::size_t rank = 0;
    for (; rank < 4; ++rank) {
        std::size_t pi = rank, pj = rank;
        double best = -1.0;
        for (std::size_t i = rank; i < 4; ++i)
            for (std::size_t j = rank; j < 4; ++j)
                if (std::abs(a(i, j)) > best) {
                    best = std::abs(a(i, j));
                    pi = i;
                    pj = j;
                }
        if (!(best > thr)) break;
        for (std::size_t j = 0; j < 4; ++j) std::swap(a(rank, j), a(pi, j));
        for (std::size_t i = 0; i < 4; ++i) std::swap(a(i, rank), a(i, pj));
        std::swap(col[rank], col[pj]);
        const cplx p = a(rank, rank);
        for (std::size_t j = 0; j < 4; ++j) a(rank, j) /= p;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == rank) continue;
            const cplx f = a(i, rank);
            for (std::size_t j = 0; j < 4; ++j) a(i, j) -= f * a(rank, j);
        }
    }
    std::vector<Vec4c> out;
    for (std::size_t f = rank; f < 4; ++f) {
        Vec4c x{};
        x[col[f]] = 1.0;
        for (std::size_t k = 0; k < rank; ++k) x[col[k]] = -a(k, f);
        out.push_back(canonical_phase(x));
    }
    return out;
}

RealAxisAngle spatial_real_axis(const LorentzMat& l, const Tolerance& tol) {
    const Mat3 a = l.a();
    const double c2 = trace(a);
    const double c1 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0) +
                      a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
    const double c0 = det(a);
    const double alpha = largest_real_root(c2, c1, c0);
    Mat3 shifted = a;
    for (std::size_t i = 0; i < 3; ++i) shifted(i, i) -= alpha;
    const Vec3 axis = kernel3(shifted);
    const PolarUP up = polar(l, tol);
    return {alpha, axis, dot(axis, up.r * axis)};
}

LorentzEigen eigen(const LorentzMat& l, const Tolerance& tol) {
    if (!l.proper()) throw Error(ErrorKind::Domain, "eigen: improper Lorentz matrix");
    const Mat4& m = l.matrix();
    const Spectrum sp = spectrum_of(m);
    const double lam = std::exp(sp.sigma);
    const cplx mu = std::polar(1.0, sp.theta);

    LorentzEigen e;
    e.a_coeff = sp.cosh_sigma;
    e.values = {lam, 1.0 / lam, mu, std::conj(mu)};

    // Cluster coincident eigenvalues.
    constexpr double kMerge = 1e-9;
    std::vector<std::pair<cplx, int>> clusters;
    for (const cplx& v : e.values) {
        bool merged = false;
        for (auto& c : clusters)
            if (std::abs(c.first - v) <= kMerge * std::max(1.0, std::abs(v))) {
                ++c.second;
                merged = true;
                break;
            }
        if (!merged) clusters.push_back({v, 1});
    }

    const double nm = norm(m);
    for (const auto& [value, mult] : clusters) {
        // Half-turn with a boost: the -1 eigenspace is explicit.
        if (mult == 2 && std::abs(value + 1.0) <= kMerge && l.s() > 1.0 + kMerge) {
            const PolarUP up = polar(l, tol);
            std::vector<Vec4c> vs;
            if (std::abs(dot(up.axis, up.v)) > 1.0 - 1e-8) {
                const auto [e1, e2] = orthonormal_complement(up.v);
                vs = {to_complex(lift(0.0, e1)), to_complex(lift(0.0, e2))};
            } else {
                const double eps = -std::sqrt((l.s() - 1.0) / (l.s() + 1.0));
                vs = {canonical_phase(to_complex(lift(eps, up.v))),
                      canonical_phase(to_complex(lift(0.0, normalized(cross(up.axis, up.v)))))};
            }
            bool ok = true;
            for (const auto& v : vs) ok = ok && residual(m, -1.0, v) <= 1e-8 * std::max(1.0, nm);
            if (ok) {
                for (const auto& v : vs) {
                    e.vectors.push_back(v);
                    e.vector_values.push_back(-1.0);
                }
                continue;
            }
        }
        Mat4c shifted = to_complex(m);
        for (std::size_t i = 0; i < 4; ++i) shifted(i, i) -= value;
        for (const auto& v : null_space(shifted, 1e-10)) {
            e.vectors.push_back(v);
            e.vector_values.push_back(value);
        }
    }
    return e;
}

MaxwellGen log_diag_oracle(const LorentzMat& l, const Tolerance& tol) {
    if (!l.proper()) throw Error(ErrorKind::Domain, "log_diag_oracle: improper Lorentz matrix");
    const Mat4& m = l.matrix();
    if (tol.accepts(norm(m - Mat4::identity()), 1.0)) return MaxwellGen{};

    const LorentzEigen e = eigen(l, tol);
    const Spectrum sp = spectrum_of(m);
    constexpr double kFlat = 1e-9;
    if (sp.sigma <= kFlat && sp.theta <= kFlat)
        throw Error(ErrorKind::Domain, "log_diag_oracle: parabolic matrix; use the spin logarithm");

    const cplx lam = e.values[0], mu = e.values[2];
    const cplx i(0.0, 1.0);
    std::vector<Vec4c> cols;
    std::vector<cplx> diag;
    std::vector<Vec4> half_turn;
    bool have_mu = false;

    for (std::size_t k = 0; k < e.vectors.size(); ++k) {
        const cplx val = e.vector_values[k];
        const Vec4c& v = e.vectors[k];
        if (sp.sigma > kFlat && std::abs(val - lam) <= 1e-9 * std::abs(lam)) {
            cols.push_back(v);
            diag.push_back(sp.sigma);
        } else if (sp.sigma > kFlat && std::abs(val - 1.0 / lam) <= 1e-9) {
            cols.push_back(v);
            diag.push_back(-sp.sigma);
        } else if (sp.theta > kFlat && std::abs(val + 1.0) <= 1e-9 && std::numbers::pi - sp.theta <= 1e-9) {
            half_turn.push_back(real_part(v));
        } else if (sp.theta > kFlat && std::abs(val - mu) <= 1e-9) {
            if (have_mu) continue;
            have_mu = true;
            cols.push_back(v);
            diag.push_back(i * sp.theta);
            cols.push_back(conj(v));
            diag.push_back(-i * sp.theta);
        } else if (sp.theta > kFlat && std::abs(val - std::conj(mu)) <= 1e-9) {
            continue;  // paired with mu
        } else {
            cols.push_back(v);
            diag.push_back(0.0);
        }
    }

    if (!half_turn.empty()) {
        if (half_turn.size() != 2) throw Error(ErrorKind::Numerical, "log_diag_oracle: half-turn eigenspace incomplete");
        // G-orthonormal spacelike pair e1, e2; e1 - i e2 owns i pi.
        const Vec4 e1 = half_turn[0] / std::sqrt(-g_inner(half_turn[0], half_turn[0]));
        Vec4 e2 = half_turn[1] + e1 * g_inner(half_turn[1], e1);
        e2 = e2 / std::sqrt(-g_inner(e2, e2));
        const Vec4c w = to_complex(e1) - to_complex(e2) * i;
        cols.push_back(w);
        diag.push_back(i * std::numbers::pi);
        cols.push_back(conj(w));
        diag.push_back(-i * std::numbers::pi);
    }

    if (cols.size() != 4) throw Error(ErrorKind::Numerical, "log_diag_oracle: incomplete eigenbasis");
    Mat4c v, d;
    for (std::size_t c = 0; c < 4; ++c) {
        for (std::size_t r = 0; r < 4; ++r) v(r, c) = cols[c][r];
        d(c, c) = diag[c];
    }
    const Mat4c f = v * d * inverse(v);
    const double imag = max_abs(imag_part(f));
    if (imag > 1e-6 * std::max(1.0, max_abs(real_part(f))))
        throw Error(ErrorKind::Numerical, "log_diag_oracle: complex logarithm", imag);
    return from_matrix(real_part(f));
}

}  // namespace lorentz
