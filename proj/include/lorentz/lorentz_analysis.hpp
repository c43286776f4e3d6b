#pragma once

#include <array>
#include <vector>

#include "lorentz/core4.hpp"
#include "lorentz/maxwell.hpp"

namespace lorentz {

// A G-orthogonal 4x4 matrix with its block split
//   [ s  q^T ]
//   [ p  A   ]
class LorentzMat {
public:
    const Mat4& matrix() const { return m_; }
    double s() const { return m_(0, 0); }
    Vec3 p() const { return {{m_(1, 0), m_(2, 0), m_(3, 0)}}; }
    Vec3 q() const { return {{m_(0, 1), m_(0, 2), m_(0, 3)}}; }
    Mat3 a() const { return spatial_block(m_); }
    double det() const { return det_; }
    bool proper() const { return proper_; }
    double residual() const { return residual_; }

    friend LorentzMat validate(const Mat4& m, const Tolerance& tol);

private:
    Mat4 m_{};
    double det_ = 1.0;
    bool proper_ = true;
    double residual_ = 0.0;
};

// Throws not-lorentz (with the residual) when M^G M = I or M M^G = I fails.
LorentzMat validate(const Mat4& m, const Tolerance& tol = {});

// Residuals of the block relations A^T p = s q, A q = s p, A^T A = q q^T + I,
// A A^T = p p^T + I and p^2 = q^2 = s^2 - 1.
struct BlockResiduals {
    double at_p;
    double a_q;
    double at_a;
    double a_at;
    double lengths;
    double max() const;
};

BlockResiduals block_residuals(const LorentzMat& l);

// Lambda = U P, U = diag-block(1, R), P the symmetric boost along v.
struct PolarUP {
    Mat3 r;
    Vec3 axis;           // rotation axis of R
    double angle = 0.0;  // in [0, pi]
    double s = 1.0;
    double t = 0.0;  // sqrt(s^2 - 1)
    Vec3 v;          // boost direction
    Vec3 u;          // R v

    Mat3 stretch() const;  // I + (s - 1) v v^T
    Mat4 rotation4() const;
    Mat4 boost4() const;
};

PolarUP polar(const LorentzMat& l, const Tolerance& tol = {});

struct AxisAngle {
    Vec3 axis;
    double angle;
};

// R = rotation3(axis, angle). angle = 0 gives axis e3; angle = pi takes the
// axis from the dominant diagonal entry of (R + I) / 2.
AxisAngle rotation_axis_angle(const Mat3& r, const Tolerance& tol = {});

struct GramEigen {
    double gamma;  // (s + t)^2
    double alpha;  // t
    std::array<double, 4> values;  // gamma, 1/gamma, 1, 1
    std::array<Vec4, 4> vectors;   // (t, q), (-t, q), (0, q1), (0, q2) normalized
};

// Eigen-system of Lambda^T Lambda.
GramEigen gram_eigen(const LorentzMat& l);

struct LorentzEigen {
    double a_coeff;                 // lambda^2 - 2 a lambda + 1 = 0 for the real pair
    std::array<cplx, 4> values;     // lambda, 1/lambda, mu, conj(mu)
    std::vector<cplx> vector_values;  // eigenvalue owning vectors[k]
    std::vector<Vec4c> vectors;
};

LorentzEigen eigen(const LorentzMat& l, const Tolerance& tol = {});

// Unit real eigenvector a of A for its real eigenvalue of largest modulus,
// with the cosine of the angle between a and R a.
struct RealAxisAngle {
    double eigenvalue;
    Vec3 a;
    double cos_angle;
};

RealAxisAngle spatial_real_axis(const LorentzMat& l, const Tolerance& tol = {});

// Log through diagonalization; domain error on parabolic input.
MaxwellGen log_diag_oracle(const LorentzMat& l, const Tolerance& tol = {});

// Null space of a 4x4 complex matrix by full-pivot elimination; pivots below
// rel * |M| count as zero.
std::vector<Vec4c> null_space(const Mat4c& m, double rel = 1e-10);

}  // namespace lorentz
