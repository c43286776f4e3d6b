#include <doctest.h>

#include "lorentz/maxwell.hpp"
#include "support.hpp"

using namespace lorentz;
using testing::max_diff;
using testing::rand3;

namespace {

const Vec3 kD{{1, 1, 1}};
const Vec3 kH{{1, -2, -1}};

MaxwellGen ex23() { return build(kD, kH); }

double residual(const MaxwellGen& f, const EigenPair& p) {
    return norm(to_complex(f.matrix()) * p.vector - p.vector * p.value);
}

// One generator per classification branch.
MaxwellGen sample_of(GenClass c) {
    switch (c) {
        case GenClass::Zero: return build(Vec3{}, Vec3{});
        case GenClass::Regular: return testing::rand_gen();
        case GenClass::BoostLike: {
            const Vec3 d = rand3();
            if (testing::uniform(0, 1) < 0.5) return build(d, Vec3{});
            const auto [e1, e2] = orthonormal_complement(normalized(d));
            return build(d, e1 * (norm(d) * testing::uniform(0.0, 0.9)));
        }
        case GenClass::RotationLike: {
            const Vec3 h = rand3();
            if (testing::uniform(0, 1) < 0.5) return build(Vec3{}, h);
            const auto [e1, e2] = orthonormal_complement(normalized(h));
            return build(e2 * (norm(h) * testing::uniform(0.05, 0.9)), h);
        }
        case GenClass::Parallel: return build(kD * testing::uniform(0.2, 2.0), kD * testing::uniform(-2.0, 2.0));
        case GenClass::HyperSingular: return testing::rand_hyper(testing::uniform(0.1, 3.0));
    }
    return {};
}

}  // namespace

TEST_CASE("build matches the printed generator") {
    const Mat4 expect{{0, 1, 1, 1, 1, 0, -1, 2, 1, 1, 0, 1, 1, -2, -1, 0}};
    CHECK(ex23().matrix() == expect);
    CHECK_FALSE(ex23().is_zero());
    const MaxwellGen z = build(Vec3{}, Vec3{});
    CHECK(z.is_zero());
    CHECK(z.matrix() == Mat4::zero());
    CHECK(MaxwellGen{}.is_zero());
    CHECK_THROWS_AS(build({{std::nan(""), 0, 0}}, Vec3{}), Error);

    for (int k = 0; k < 100; ++k) {
        const MaxwellGen f = testing::rand_gen();
        CHECK(g_transpose(f.matrix()) == -f.matrix());
        const MaxwellGen g = testing::rand_gen();
        CHECK(max_diff(build(f.d() + g.d() * 2.0, f.h() + g.h() * 2.0).matrix(), f.matrix() + g.matrix() * 2.0) <=
              1e-14);
        CHECK(from_matrix(f.matrix()).d() == f.d());
        CHECK(from_matrix(f.matrix()).h() == f.h());
    }
}

TEST_CASE("skew conjugate") {
    const Mat4 expect{{0, 1, -2, -1, 1, 0, -1, 1, -2, 1, 0, -1, -1, -1, 1, 0}};
    CHECK(skew_conjugate(ex23()).matrix() == expect);
    CHECK(skew_conjugate(skew_conjugate(ex23())).matrix() == -ex23().matrix());
    CHECK(ex23().matrix() * skew_conjugate(ex23()).matrix() == Mat4::identity() * -2.0);
}

TEST_CASE("eigen_params examples") {
    const EigenParams e = eigen_params(ex23());
    CHECK(std::abs(e.sigma - 1.0) <= 1e-12);
    CHECK(std::abs(e.theta + 2.0) <= 1e-12);
    CHECK(std::abs(e.norm2 - 5.0) <= 1e-12);
    CHECK(std::abs(e.zeta - norm(cross(kD, kH))) <= 1e-14);

    const EigenParams hs = eigen_params(build({{1, 0, 0}}, {{0, 1, 0}}));
    CHECK(hs.sigma == 0.0);
    CHECK(hs.theta == 0.0);

    const EigenParams b = eigen_params(build({{2, 0, 0}}, Vec3{}));
    CHECK(b.sigma == 2.0);
    CHECK(b.theta == 0.0);

    const EigenParams r = eigen_params(build(Vec3{}, {{0, 0, -3}}));
    CHECK(r.sigma == 0.0);
    CHECK(r.theta == 3.0);
}

TEST_CASE("eigen_params invariants") {
    for (int k = 0; k < 1000; ++k) {
        const MaxwellGen f = testing::rand_gen();
        const Vec3 &d = f.d(), &h = f.h();
        const EigenParams e = eigen_params(f);
        const double dd = dot(d, d), hh = dot(h, h), p = dot(d, h);
        CHECK(e.sigma >= 0.0);
        CHECK(std::abs(e.sigma * e.sigma - e.theta * e.theta - (dd - hh)) <= 1e-12 * std::max(1.0, dd + hh));
        CHECK(std::abs(e.sigma * e.theta - p) <= 1e-12 * std::max(1.0, dd + hh));
        CHECK(e.sigma <= norm(d) * (1 + 1e-14));
        CHECK(std::abs(e.theta) <= norm(h) * (1 + 1e-14));
        CHECK(std::abs((hh - e.theta * e.theta) * (hh + e.sigma * e.sigma) - e.zeta * e.zeta) <=
              1e-11 * std::max(1.0, (dd + hh) * (dd + hh)));

        // roots of the characteristic polynomial
        auto roots = testing::biquadratic_roots(d, h);
        double best = 0.0;
        for (cplx lam : {cplx(e.sigma), cplx(-e.sigma), cplx(0, e.theta), cplx(0, -e.theta)}) {
            double m = 1e300;
            for (cplx r : roots) m = std::min(m, std::abs(r - lam));
            best = std::max(best, m);
        }
        CHECK(best <= 1e-7);
    }
}

TEST_CASE("generator identities") {
    for (int k = 0; k < 1000; ++k) {
        const MaxwellGen f = testing::rand_gen();
        const Mat4& m = f.matrix();
        const Mat4 mt = skew_conjugate(f).matrix();
        const double dd = dot(f.d(), f.d()), hh = dot(f.h(), f.h()), p = dot(f.d(), f.h());
        CHECK(std::abs(det(m) + p * p) <= 1e-12 * 100);
        CHECK(std::abs(trace(m * m) - 2.0 * (dd - hh)) <= 1e-12 * 100);
        CHECK(max_diff(m * mt, Mat4::identity() * p) <= 1e-13 * 100);
        CHECK(max_diff(m * m - mt * mt, Mat4::identity() * (dd - hh)) <= 1e-13 * 100);
        CHECK(max_diff(m * m * m, m * (dd - hh) + mt * p) <= 1e-12 * 100);
    }
}

TEST_CASE("hyper-singular generators are nilpotent") {
    for (int k = 0; k < 200; ++k) {
        const MaxwellGen f = testing::rand_hyper(testing::uniform(0.1, 3.0));
        const double n = norm(f.matrix());
        CHECK(max_abs(f.matrix() * f.matrix() * f.matrix()) <= 1e-13 * n * n * n);
        CHECK(classify(f).kind == GenClass::HyperSingular);
    }
}

TEST_CASE("classify examples") {
    CHECK(classify(build({{1, 0, 0}}, {{0, 1, 0}})).kind == GenClass::HyperSingular);
    CHECK(classify(ex23()).kind == GenClass::Regular);
    CHECK(classify(build({{2, 0, 0}}, {{1, 0, 0}})).kind == GenClass::Parallel);
    CHECK(classify(build(Vec3{}, Vec3{})).kind == GenClass::Zero);

    const Classification b = classify(build({{2, 0, 0}}, Vec3{}));
    CHECK(b.kind == GenClass::BoostLike);
    CHECK(b.h_zero);
    CHECK_FALSE(b.d_zero);
    CHECK(classify(build({{2, 0, 0}}, {{0, 1, 0}})).kind == GenClass::BoostLike);

    const Classification r = classify(build(Vec3{}, {{0, 0, 1}}));
    CHECK(r.kind == GenClass::RotationLike);
    CHECK(r.d_zero);
    CHECK(classify(build({{1, 0, 0}}, {{0, 2, 0}})).kind == GenClass::RotationLike);

    // tolerance is scale-free
    CHECK(classify(build({{1e-8, 0, 0}}, {{0, 1e-8, 0}})).kind == GenClass::HyperSingular);
    CHECK(classify(build({{1e8, 0, 0}}, {{0, 1e8, 0}})).kind == GenClass::HyperSingular);
    CHECK(classify(build({{1, 0, 0}}, {{0, 1 + 1e-6, 0}})).kind == GenClass::RotationLike);
    CHECK(to_string(GenClass::HyperSingular) == "HyperSingular");
}

TEST_CASE("classify sampler hits every branch") {
    for (GenClass c : {GenClass::Zero, GenClass::Regular, GenClass::BoostLike, GenClass::RotationLike,
                       GenClass::Parallel, GenClass::HyperSingular})
        for (int k = 0; k < 50; ++k) CHECK(classify(sample_of(c)).kind == c);
}

TEST_CASE("split_z printed example") {
    const SplitZ s = split_z(ex23());
    const Mat4 z = Mat4{{0, -3, 0, -1, -3, 0, 3, -5, 0, -3, 0, -1, -1, 5, 1, 0}} / 5.0;
    const Mat4 zt = Mat4{{0, -1, 5, 3, -1, 0, 1, 0, 5, -1, 0, 3, 3, 0, -3, 0}} / 5.0;
    CHECK(max_diff(s.z, z) <= 1e-14);
    CHECK(max_diff(s.z_tilde, zt) <= 1e-14);
}

TEST_CASE("split_z identities") {
    for (int k = 0; k < 500; ++k) {
        const MaxwellGen f = testing::rand_gen();
        const SplitZ s = split_z(f);
        const MaxwellGen fn = normalize(f);
        const EigenParams e = eigen_params(fn);
        const Mat4& fh = fn.matrix();
        const Mat4 id = Mat4::identity();
        CHECK(max_diff(s.z * s.z * s.z, -s.z) <= 1e-12);
        CHECK(max_diff(s.z_tilde * s.z_tilde * s.z_tilde, s.z_tilde) <= 1e-12);
        CHECK(max_abs(s.z * s.z_tilde) <= 1e-12);
        CHECK(max_abs(s.z_tilde * s.z) <= 1e-12);
        CHECK(max_diff(s.z * e.theta + s.z_tilde * e.sigma, fh) <= 1e-13);
        CHECK(max_diff(s.z * s.z, fh * fh - id * (e.sigma * e.sigma)) <= 1e-12);
        CHECK(max_diff(s.z_tilde * s.z_tilde, fh * fh + id * (e.theta * e.theta)) <= 1e-12);
    }
    CHECK_THROWS_AS(split_z(build({{1, 0, 0}}, {{0, 1, 0}})), Error);
    CHECK_THROWS_AS(split_z(build(Vec3{}, Vec3{})), Error);
}

TEST_CASE("ortho_xy") {
    const MaxwellGen boost = build({{1.5, 0, 0}}, {{0, 0.5, 0}});
    CHECK(max_diff(ortho_xy(boost).x, boost.matrix()) <= 1e-14);
    CHECK(max_abs(ortho_xy(boost).y) <= 1e-14);
    const MaxwellGen rot = build(Vec3{}, {{0, 0.5, 2}});
    CHECK(max_abs(ortho_xy(rot).x) <= 1e-14);
    CHECK(max_diff(ortho_xy(rot).y, rot.matrix()) <= 1e-14);

    const OrthoXY xy = ortho_xy(ex23());
    CHECK(max_diff(xy.x * xy.x * xy.x, xy.x) <= 1e-13);
    CHECK(max_diff(xy.y * xy.y * xy.y, xy.y * -4.0) <= 1e-12);

    for (int k = 0; k < 500; ++k) {
        const MaxwellGen f = testing::rand_gen();
        const EigenParams e = eigen_params(f);
        const OrthoXY o = ortho_xy(f);
        const double sc = std::max(1.0, e.norm2 * std::sqrt(e.norm2));
        CHECK(max_diff(o.x + o.y, f.matrix()) <= 1e-13 * sc);
        CHECK(max_abs(o.x * o.y) <= 1e-12 * sc);
        CHECK(max_abs(o.y * o.x) <= 1e-12 * sc);
        CHECK(max_diff(o.x * o.x * o.x, o.x * (e.sigma * e.sigma)) <= 1e-12 * sc);
        CHECK(max_diff(o.y * o.y * o.y, o.y * -(e.theta * e.theta)) <= 1e-12 * sc);
        const auto [x2, y2] = testing::xy_linear_solve(f.matrix(), e.sigma, e.theta);
        CHECK(max_diff(o.x, x2) <= 1e-12 * sc);
        CHECK(max_diff(o.y, y2) <= 1e-12 * sc);
    }
    CHECK_THROWS_AS(ortho_xy(build({{1, 0, 0}}, {{0, 1, 0}})), Error);
}

TEST_CASE("spectral projections") {
    const MaxwellGen fn = normalize(ex23());
    const auto xs = spectral_projections(fn);
    const EigenParams e = eigen_params(fn);
    const std::array<cplx, 4> lam = {e.sigma, -e.sigma, cplx(0, e.theta), cplx(0, -e.theta)};
    Mat4c sum{}, weighted{}, expo = Mat4c::identity();
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(max_diff(xs[k] * xs[k], xs[k]) <= 1e-12);
        for (std::size_t j = 0; j < 4; ++j)
            if (j != k) CHECK(max_abs(xs[j] * xs[k]) <= 1e-12);
        CHECK(max_diff(xs[k], testing::lagrange_projector(fn.matrix(), lam, k)) <= 1e-12);
        sum += xs[k];
        weighted += xs[k] * lam[k];
        expo += xs[k] * (std::exp(lam[k]) - 1.0);
    }
    CHECK(max_diff(sum, Mat4c::identity()) <= 1e-12);
    CHECK(max_diff(weighted, to_complex(fn.matrix())) <= 1e-12);
    CHECK(max_diff(expo, to_complex(series_exp(fn.matrix()))) <= 1e-12);

    for (int k = 0; k < 300; ++k) {
        const MaxwellGen g = normalize(testing::rand_gen());
        const EigenParams eg = eigen_params(g);
        if (eg.sigma < 1e-3 || std::abs(eg.theta) < 1e-3) continue;
        const std::array<cplx, 4> l = {eg.sigma, -eg.sigma, cplx(0, eg.theta), cplx(0, -eg.theta)};
        const auto p = spectral_projections(g);
        for (std::size_t j = 0; j < 4; ++j) CHECK(max_diff(p[j], testing::lagrange_projector(g.matrix(), l, j)) <= 1e-9);
    }

    CHECK_THROWS_AS(spectral_projections(ex23()), Error);
    CHECK_THROWS_AS(spectral_projections(normalize(build({{1, 0, 0}}, Vec3{}))), Error);
}

TEST_CASE("eigenvectors for the printed example") {
    const auto pairs = eigenvectors(ex23());
    REQUIRE(pairs.size() == 4);
    const std::array<cplx, 4> expect = {1.0, -1.0, cplx(0, -2), cplx(0, 2)};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(pairs[k].value - expect[k]) <= 1e-12);
        CHECK(residual(ex23(), pairs[k]) <= 1e-12);
        CHECK(std::abs(norm(pairs[k].vector) - 1.0) <= 1e-14);
    }
}

TEST_CASE("eigenvectors with d = 0") {
    const Vec3 h{{0, 0, 2}};
    const MaxwellGen f = build(Vec3{}, h);
    const auto pairs = eigenvectors(f);
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0].value == cplx(0.0));
    CHECK(pairs[0].vector == Vec4c{{1.0, 0.0, 0.0, 0.0}});
    CHECK(pairs[1].value == cplx(0.0));
    CHECK(pairs[1].vector == Vec4c{{0.0, 0.0, 0.0, 1.0}});
    CHECK(std::abs(pairs[2].value - cplx(0, 2)) <= 1e-15);
    CHECK(std::abs(pairs[3].value - cplx(0, -2)) <= 1e-15);
    for (const auto& p : pairs) CHECK(residual(f, p) <= 1e-14);
    // spatial part of the +i|h| vector lies in the plane orthogonal to h
    CHECK(std::abs(pairs[2].vector[3]) <= 1e-15);
    CHECK(std::abs(pairs[2].vector[0]) <= 1e-15);
}

TEST_CASE("eigenvectors hyper-singular") {
    const MaxwellGen f = build({{1, 0, 0}}, {{0, 1, 0}});
    const auto pairs = eigenvectors(f);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].vector == Vec4c{{0.0, 0.0, 1.0, 0.0}});
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(max_diff(pairs[1].vector, Vec4c{{r, 0.0, 0.0, r}}) <= 1e-15);
    for (const auto& p : pairs) CHECK(residual(f, p) <= 1e-15);
}

TEST_CASE("eigenvectors h = 0 and parallel") {
    const MaxwellGen b = build({{0, 3, 0}}, Vec3{});
    const auto pb = eigenvectors(b);
    REQUIRE(pb.size() == 4);
    CHECK(pb[0].value == cplx(3.0));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(max_diff(pb[0].vector, Vec4c{{r, 0.0, r, 0.0}}) <= 1e-15);
    for (const auto& p : pb) CHECK(residual(b, p) <= 1e-14);

    const MaxwellGen par = build({{1, 2, 2}}, {{-2, -4, -4}});
    for (const auto& p : eigenvectors(par)) CHECK(residual(par, p) <= 1e-13 * norm(par.matrix()));
}

TEST_CASE("eigenvector catalog across branches") {
    for (GenClass c : {GenClass::Zero, GenClass::Regular, GenClass::BoostLike, GenClass::RotationLike,
                       GenClass::Parallel, GenClass::HyperSingular}) {
        for (int k = 0; k < 200; ++k) {
            const MaxwellGen f = sample_of(c);
            const auto pairs = eigenvectors(f);
            CHECK(!pairs.empty());
            for (const auto& p : pairs) {
                CHECK(residual(f, p) <= 1e-10 * std::max(1.0, norm(f.matrix())));
                CHECK(std::abs(norm(p.vector) - 1.0) <= 1e-13);
            }
        }
    }
}

TEST_CASE("canonical_phase") {
    const Vec4c v{{cplx(0, 0), cplx(0, 2), cplx(1, 0), 0.0}};
    const Vec4c c = canonical_phase(v);
    CHECK(std::abs(norm(c) - 1.0) <= 1e-15);
    CHECK(c[1].imag() == 0.0);
    CHECK(c[1].real() > 0.0);
}
