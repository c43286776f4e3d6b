#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "lorentz/core4.hpp"
#include "lorentz/lorentz_analysis.hpp"
#include "lorentz/maxwell.hpp"

namespace lorentz {

// gamma sigma_0 + c_1 sigma_1 + c_2 sigma_2 + c_3 sigma_3
struct PauliVec {
    cplx gamma{};
    Vec3c c{};

    double alpha() const { return gamma.real(); }
    double beta() const { return gamma.imag(); }
    Vec3 a() const { return real_part(c); }
    Vec3 b() const { return imag_part(c); }

    static PauliVec scalar(cplx g) { return {g, Vec3c{}}; }
    bool operator==(const PauliVec&) const = default;
};

// Linear extension of e_k -> sigma_k.
Mat2c encode(const Vec4c& x);
// x_k = tr(sigma_k X) / 2
Vec4c decode(const Mat2c& m);

Vec4c to_vec4(const PauliVec& p);
PauliVec from_vec4(const Vec4c& x);

PauliVec pv_mul(const PauliVec& p, const PauliVec& q);
inline PauliVec operator*(const PauliVec& p, const PauliVec& q) { return pv_mul(p, q); }
PauliVec operator*(const PauliVec& p, cplx z);
PauliVec operator-(const PauliVec& p);

// gamma^2 - c.c
cplx pv_det(const PauliVec& p);
// gamma - c; domain error unless det = 1.
PauliVec pv_inv_unimodular(const PauliVec& p, const Tolerance& tol = {});

// l_jk = tr(sigma_j C sigma_k C^*) / 2
Mat4 jaws_direct(const PauliVec& p);
// Same matrix assembled from (alpha, beta, a, b).
Mat4 jaws_closed(const PauliVec& p);
inline Mat4 jaws(const PauliVec& p) { return jaws_closed(p); }

// Picks the representative of {M, -M} with Re gamma > 0, then Im gamma > 0,
// then the first nonzero of the eight real components positive.
PauliVec sign_normalize(const PauliVec& p);

struct SpinPair {
    PauliVec rotation;  // cos(rho/2) - i sin(rho/2) axis
    PauliVec boost;     // sqrt((s+1)/2) + sqrt((s-1)/2) v
    PauliVec m;         // rotation * boost, sign-normalized
};

SpinPair lorentz_to_spin(const LorentzMat& l, const Tolerance& tol = {});

// cosh(z) + sinh(z)/z w with z^2 = w.w
PauliVec spin_exp(const Vec3c& w);

enum class SpinBranch { Diagonalizable, Defective, Identity };

std::string_view to_string(SpinBranch b);

// jaws(spin_exp(w / 2)) = exp(F(Re w, Im w))
struct SpinLog {
    Vec3c w;
    SpinBranch branch = SpinBranch::Identity;
    std::optional<cplx> z0;
};

SpinLog spin_log(const PauliVec& m, const Tolerance& tol = {});

// Generator F with exp(F) = L.
MaxwellGen lorentz_log(const LorentzMat& l, const Tolerance& tol = {});

struct DefectiveInfo {
    bool defective = false;
    Vec4c eigvec{};
    std::array<Vec4c, 2> span{};
};

DefectiveInfo defective_analysis(const PauliVec& m, const Tolerance& tol = {});

}  // namespace lorentz
