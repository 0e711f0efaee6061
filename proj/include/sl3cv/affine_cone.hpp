#pragma once

#include <Eigen/Dense>

#include "sl3cv/errors.hpp"

namespace sl3cv {

// Coning data: base dimension n, affine-sphere sign H, radial coordinate r
// with 1 - H r^{n+1} > 0 (so r in (0,1) for H = +1).
struct ConeGeometry {
    int n = 2;
    int H = +1;
    double r = 0.5;
};

void validate(const ConeGeometry& c);

// Convex potential phi(r) = -H * int_0^r (1 - H rho^{n+1})^{1/(n+1)} d rho,
// adaptive quadrature to absolute accuracy 1e-12.
double phi(const ConeGeometry& c);

// Analytic phi'(r) = -H (1 - H r^{n+1})^{1/(n+1)}.
double phi_derivative(const ConeGeometry& c);

// Analytic phi''(r) = r^n (1 - H r^{n+1})^{-n/(n+1)}, the radial metric coefficient.
double phi_second_derivative(const ConeGeometry& c);

// Hessian-metric coefficients: dphi = c_rr dr^2 + c_base * (pullback base metric).
struct MaCoeffs {
    double c_rr;    // (1 - H r^{n+1})^{-n/(n+1)} r^n
    double c_base;  // r (1 - H r^{n+1})^{1/(n+1)}
};
MaCoeffs ma_metric_coeffs(const ConeGeometry& c);

// |det - 1| of the Hessian metric in a volume-unimodular frame
// (r^{-n} d_r, f_1..f_n with unit base volume): det = c_rr r^{-2n} c_base^n.
double verify_monge_ampere(const ConeGeometry& c);

// Tangent-space model of the semi-flat metric: g = diag(base, base),
// J = [[0, -I], [I, 0]]; J^2 = -I and g(J., J.) = g hold by block algebra.
struct SemiFlatSample {
    Eigen::MatrixXd base;
    Eigen::MatrixXd J;
    Eigen::MatrixXd g;
};

SemiFlatSample semiflat_assemble(const Eigen::MatrixXd& base);

}  // namespace sl3cv
