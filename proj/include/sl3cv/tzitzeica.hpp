#pragma once

#include <functional>
#include <vector>

#include "sl3cv/errors.hpp"

namespace sl3cv {

enum class Background { FlatLocal, HyperbolicDisk };

// Conformal-factor equation of a hyperbolic affine sphere on a disk,
// discretized on a uniform Cartesian grid with a circular mask.
//   FlatLocal:       lap(u) + 8 |q|^2 e^{-4u} - (1/2) e^{2u} = 0
//   HyperbolicDisk:  2 lap_{g0}(u) + 2 |Q|^2 e^{-4u} - e^{2u} + 1 = 0
// with g0 the curvature -1 metric on the unit disk.
struct TzitzeicaProblem {
    Background background = Background::FlatLocal;
    int mean_curvature_sign = +1;  // only the hyperbolic case H = +1 is supported
    double radius = 1.0;           // < 1 and capped at 0.95 for HyperbolicDisk
    int grid_n = 65;               // odd, >= 17
    std::function<double(double, double)> q_sq;      // |q|^2 at (x, y), >= 0
    std::function<double(double, double)> boundary;  // u at polar (r, theta)
};

std::function<double(double, double)> constant_fn(double c);

struct TzitzeicaSolution {
    int grid_n = 0;
    double h = 0;
    std::vector<double> u;  // grid_n x grid_n, row-major; boundary nodes included
    double residual_inf = 0;
    int newton_iters = 0;
};

// Grid helpers shared by the solver and its consumers.
bool grid_interior(const TzitzeicaProblem& p, int i, int j);
double grid_x(const TzitzeicaProblem& p, int j);
double grid_y(const TzitzeicaProblem& p, int i);

// Damped Newton iteration from the constant initial guess. Throws
// InvalidDomainError for bad problems and NonConvergenceError (with the last
// residual attached) when max_iters is exhausted.
TzitzeicaSolution solve(const TzitzeicaProblem& p, double tol, int max_iters,
                        double initial = 0.0);

// Max-norm of the discrete operator over interior nodes.
double residual_inf(const TzitzeicaProblem& p, const std::vector<double>& u);

// e^{2u} times the background conformal factor, per node.
std::vector<double> blaschke_factor(const TzitzeicaProblem& p, const TzitzeicaSolution& s);

}  // namespace sl3cv
