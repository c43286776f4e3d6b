#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "lorentz/core4.hpp"

namespace lorentz {

// G-skew-symmetric generator
//   [ 0   d^T  ]
//   [ d   V(h) ]
// stored through its vector pair (d, h).
class MaxwellGen {
public:
    MaxwellGen() = default;  // zero generator

    const Vec3& d() const { return d_; }
    const Vec3& h() const { return h_; }
    const Mat4& matrix() const { return m_; }
    bool is_zero() const { return zero_; }

    friend MaxwellGen build(const Vec3& d, const Vec3& h);

private:
    Vec3 d_{};
    Vec3 h_{};
    Mat4 m_{};
    bool zero_ = true;
};

MaxwellGen build(const Vec3& d, const Vec3& h);

// F(h, -d)
MaxwellGen skew_conjugate(const MaxwellGen& f);

MaxwellGen scaled(const MaxwellGen& f, double k);

// Recovers (d, h) from the G-skew part of a 4x4 matrix.
MaxwellGen from_matrix(const Mat4& m);

struct EigenParams {
    double sigma = 0.0;  // >= 0
    double theta = 0.0;  // sign(theta) = sign(d.h)
    double zeta = 0.0;   // |d x h|
    double norm2 = 0.0;  // sigma^2 + theta^2
};

// Eigenvalues of F are +-sigma, +-i theta.
EigenParams eigen_params(const MaxwellGen& f);

// F scaled to sigma^2 + theta^2 = 1. Domain error when that sum vanishes.
MaxwellGen normalize(const MaxwellGen& f);

enum class GenClass { Zero, Regular, BoostLike, RotationLike, Parallel, HyperSingular };

std::string_view to_string(GenClass c);

struct Classification {
    GenClass kind = GenClass::Zero;
    bool d_zero = false;
    bool h_zero = false;
};

Classification classify(const MaxwellGen& f, const Tolerance& tol = {});

struct SplitZ {
    Mat4 z;        // Z^3 = -Z
    Mat4 z_tilde;  // Zt^3 = Zt
};

SplitZ split_z(const MaxwellGen& f, const Tolerance& tol = {});

struct OrthoXY {
    Mat4 x;  // X^3 = sigma^2 X
    Mat4 y;  // Y^3 = -theta^2 Y
};

OrthoXY ortho_xy(const MaxwellGen& f, const Tolerance& tol = {});

// Projections onto the eigenspaces of sigma, -sigma, i theta, -i theta.
// Requires a normalized nonsingular generator.
std::array<Mat4c, 4> spectral_projections(const MaxwellGen& f, const Tolerance& tol = {});

struct EigenPair {
    cplx value;
    Vec4c vector;  // unit length, first nonzero entry real positive
};

std::vector<EigenPair> eigenvectors(const MaxwellGen& f, const Tolerance& tol = {});

// Scales to unit Euclidean norm and rotates the phase so the first entry
// above 1e-12 is real positive.
Vec4c canonical_phase(const Vec4c& v);

}  // namespace lorentz
