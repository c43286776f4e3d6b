#pragma once

#include "lorentz/core4.hpp"
#include "lorentz/maxwell.hpp"

namespace lorentz {

// Limit-safe kernels; Maclaurin polynomials below |x| = 1e-4.
double sinc(double x);   // sin x / x
double cosc(double x);   // (1 - cos x) / x^2
double sinhc(double x);  // sinh x / x
double coshc(double x);  // (cosh x - 1) / x^2

// exp(tZ) for Z^3 = cZ. Throws invalid-argument when the cube law fails.
Mat4 exp_idem3(const Mat4& z, double c, double t, const Tolerance& tol = {});
Mat3 exp_idem3(const Mat3& z, double c, double t, const Tolerance& tol = {});

// exp(-theta V(axis)): right-handed rotation by theta about a unit axis.
Mat3 rotation3(const Vec3& axis, double theta, const Tolerance& tol = {});

// Closed-form exp(tF).
Mat4 exp_maxwell(const MaxwellGen& f, double t);

struct PredictedScalars {
    double delta00;
    double trace;
};

// (0,0) entry and trace of exp(tF) for a normalized generator.
PredictedScalars predicted_scalars(const MaxwellGen& f, double t, const Tolerance& tol = {});

}  // namespace lorentz
