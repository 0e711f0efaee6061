#include "sl3cv/tzitzeica.hpp"

#include <Eigen/Sparse>
#include <cmath>

namespace sl3cv {

std::function<double(double, double)> constant_fn(double c) {
    return [c](double, double) { return c; };
}

namespace {

void validate(const TzitzeicaProblem& p) {
    if (p.mean_curvature_sign != +1)
        throw InvalidDomainError(
            "only the hyperbolic affine sphere case H = +1 (structure group SU(3)) "
            "is supported; H = -1 is rejected");
    if (p.grid_n < 17 || p.grid_n % 2 == 0)
        throw InvalidDomainError("grid_n must be odd and >= 17");
    if (!(p.radius > 0)) throw InvalidDomainError("radius must be positive");
    if (p.background == Background::HyperbolicDisk && p.radius > 0.95)
        throw InvalidDomainError("hyperbolic-disk radius is capped at 0.95");
    if (!p.q_sq || !p.boundary)
        throw InvalidDomainError("q_sq and boundary functions are required");
}

double hyper_factor(double rho_sq) {
    double t = 1.0 - rho_sq;
    return 4.0 / (t * t);
}

// Pointwise zeroth-order term and its u-derivative.
void zeroth_order(const TzitzeicaProblem& p, double q, double u, double rho_sq,
                  double& value, double& deriv, double& lap_scale) {
    if (p.background == Background::FlatLocal) {
        lap_scale = 1.0;
        value = 8.0 * q * std::exp(-4.0 * u) - 0.5 * std::exp(2.0 * u);
        deriv = -32.0 * q * std::exp(-4.0 * u) - std::exp(2.0 * u);
    } else {
        lap_scale = 2.0 / hyper_factor(rho_sq);
        value = 2.0 * q * std::exp(-4.0 * u) - std::exp(2.0 * u) + 1.0;
        deriv = -8.0 * q * std::exp(-4.0 * u) - 2.0 * std::exp(2.0 * u);
    }
}

}  // namespace

double grid_x(const TzitzeicaProblem& p, int j) {
    double h = 2.0 * p.radius / (p.grid_n - 1);
    return -p.radius + j * h;
}

double grid_y(const TzitzeicaProblem& p, int i) {
    return grid_x(p, i);
}

bool grid_interior(const TzitzeicaProblem& p, int i, int j) {
    double x = grid_x(p, j), y = grid_y(p, i);
    return x * x + y * y < p.radius * p.radius;
}

double residual_inf(const TzitzeicaProblem& p, const std::vector<double>& u) {
    validate(p);
    const int n = p.grid_n;
    if (u.size() != static_cast<size_t>(n) * n)
        throw InvalidDomainError("grid shape mismatch");
    double h = 2.0 * p.radius / (n - 1);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!grid_interior(p, i, j)) continue;
            double x = grid_x(p, j), y = grid_y(p, i);
            double lap = (u[i * n + (j + 1)] + u[i * n + (j - 1)] + u[(i + 1) * n + j] +
                          u[(i - 1) * n + j] - 4.0 * u[i * n + j]) /
                         (h * h);
            double val, der, scale;
            zeroth_order(p, p.q_sq(x, y), u[i * n + j], x * x + y * y, val, der, scale);
            double res = scale * lap + val;
            worst = std::max(worst, std::abs(res));
        }
    return worst;
}

TzitzeicaSolution solve(const TzitzeicaProblem& p, double tol, int max_iters, double initial) {
    validate(p);
    if (!(tol > 0)) throw InvalidDomainError("tolerance must be positive");
    const int n = p.grid_n;
    const double h = 2.0 * p.radius / (n - 1);

    // Unknown indexing over interior nodes; everything else carries Dirichlet
    // data interpolated from the boundary function at the node's own (r, theta).
    std::vector<int> idx(static_cast<size_t>(n) * n, -1);
    std::vector<std::pair<int, int>> nodes;
    std::vector<double> u(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double x = grid_x(p, j), y = grid_y(p, i);
            if (grid_interior(p, i, j)) {
                if (p.q_sq(x, y) < 0)
                    throw InvalidDomainError("q_sq must be nonnegative on the domain");
                idx[i * n + j] = static_cast<int>(nodes.size());
                nodes.emplace_back(i, j);
                u[i * n + j] = initial;
            } else {
                u[i * n + j] = p.boundary(std::hypot(x, y), std::atan2(y, x));
            }
        }
    const int m = static_cast<int>(nodes.size());

    auto assemble = [&](const std::vector<double>& cur, Eigen::SparseMatrix<double>& jac,
                         Eigen::VectorXd& rhs) {
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(static_cast<size_t>(m) * 5);
        rhs.resize(m);
        for (int k = 0; k < m; ++k) {
            auto [i, j] = nodes[k];
            double x = grid_x(p, j), y = grid_y(p, i);
            double val, der, scale;
            zeroth_order(p, p.q_sq(x, y), cur[i * n + j], x * x + y * y, val, der, scale);
            double lap = -4.0 * cur[i * n + j];
            double diag = -4.0 * scale / (h * h) + der;
            const int nb[4][2] = {{i, j + 1}, {i, j - 1}, {i + 1, j}, {i - 1, j}};
            for (auto [bi, bj] : nb) {
                lap += cur[bi * n + bj];
                int t = idx[bi * n + bj];
                if (t >= 0) trip.emplace_back(k, t, scale / (h * h));
            }
            trip.emplace_back(k, k, diag);
            rhs(k) = -(scale * lap / (h * h) + val);
        }
        jac.resize(m, m);
        jac.setFromTriplets(trip.begin(), trip.end());
    };

    double res = residual_inf(p, u);
    int iters = 0;
    Eigen::SparseMatrix<double> jac;
    Eigen::VectorXd rhs;
    while (res >= tol) {
        if (iters >= max_iters)
            throw NonConvergenceError("Newton iteration exhausted max_iters", res, iters);
        assemble(u, jac, rhs);
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(jac);
        if (lu.info() != Eigen::Success)
            throw NonConvergenceError("Jacobian factorization failed", res, iters);
        Eigen::VectorXd delta = lu.solve(rhs);
        ++iters;

        double step = 1.0;
        std::vector<double> trial = u;
        double trial_res = res;
        for (int halving = 0; halving < 30; ++halving) {
            for (int k = 0; k < m; ++k) {
                auto [i, j] = nodes[k];
                trial[i * n + j] = u[i * n + j] + step * delta(k);
            }
            trial_res = residual_inf(p, trial);
            if (trial_res < res) break;
            step *= 0.5;
        }
        if (trial_res >= res)
            throw NonConvergenceError("Newton step stalled", res, iters);
        u = trial;
        res = trial_res;
    }

    TzitzeicaSolution s;
    s.grid_n = n;
    s.h = h;
    s.u = std::move(u);
    s.residual_inf = res;
    s.newton_iters = iters;
    return s;
}

std::vector<double> blaschke_factor(const TzitzeicaProblem& p, const TzitzeicaSolution& s) {
    validate(p);
    const int n = p.grid_n;
    if (s.u.size() != static_cast<size_t>(n) * n)
        throw InvalidDomainError("grid shape mismatch");
    std::vector<double> out(s.u.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double x = grid_x(p, j), y = grid_y(p, i);
            // Masked-out nodes carry the factor of their radial projection
            // onto the domain circle, matching the cut-cell boundary values.
            double rho_sq = std::min(x * x + y * y, p.radius * p.radius);
            double bg = p.background == Background::FlatLocal ? 1.0 : hyper_factor(rho_sq);
            out[i * n + j] = std::exp(2.0 * s.u[i * n + j]) * bg;
        }
    return out;
}

}  // namespace sl3cv
