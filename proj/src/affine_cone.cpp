#include "sl3cv/affine_cone.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>

namespace sl3cv {

void validate(const ConeGeometry& c) {
    if (c.n < 1) throw InvalidDomainError("base dimension must be >= 1");
    if (c.H != 1 && c.H != -1) throw InvalidDomainError("H must be +1 or -1");
    if (!(c.r > 0)) throw InvalidDomainError("r must be positive");
    if (!(1.0 - c.H * std::pow(c.r, c.n + 1) > 0))
        throw InvalidDomainError("1 - H r^{n+1} must be positive");
}

namespace {

struct IntegrandParams {
    int n;
    int H;
};

double integrand(double rho, void* payload) {
    auto* p = static_cast<IntegrandParams*>(payload);
    return std::pow(1.0 - p->H * std::pow(rho, p->n + 1), 1.0 / (p->n + 1));
}

}  // namespace

double phi(const ConeGeometry& c) {
    validate(c);
    IntegrandParams params{c.n, c.H};
    gsl_function f;
    f.function = &integrand;
    f.params = &params;

    std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)>
        ws(gsl_integration_workspace_alloc(4096), gsl_integration_workspace_free);
    double result = 0, abserr = 0;
    gsl_error_handler_t* old = gsl_set_error_handler_off();
    // QAGS handles the fractional-power endpoint behavior near r = 1 for H = +1.
    // The tight request matters: finite differences of phi divide the
    // quadrature error by h^2.
    int status = gsl_integration_qags(&f, 0.0, c.r, 1e-14, 1e-14, 4096, ws.get(),
                                      &result, &abserr);
    gsl_set_error_handler(old);
    if (status != GSL_SUCCESS && abserr > 1e-12)
        throw InvalidDomainError("quadrature failed to reach 1e-12");
    return -c.H * result;
}

double phi_derivative(const ConeGeometry& c) {
    validate(c);
    return -c.H * std::pow(1.0 - c.H * std::pow(c.r, c.n + 1), 1.0 / (c.n + 1));
}

double phi_second_derivative(const ConeGeometry& c) {
    validate(c);
    return std::pow(c.r, c.n) *
           std::pow(1.0 - c.H * std::pow(c.r, c.n + 1), -c.n / (c.n + 1.0));
}

MaCoeffs ma_metric_coeffs(const ConeGeometry& c) {
    validate(c);
    double t = 1.0 - c.H * std::pow(c.r, c.n + 1);
    return {std::pow(t, -c.n / (c.n + 1.0)) * std::pow(c.r, c.n),
            c.r * std::pow(t, 1.0 / (c.n + 1.0))};
}

double verify_monge_ampere(const ConeGeometry& c) {
    MaCoeffs m = ma_metric_coeffs(c);
    double det = m.c_rr * std::pow(c.r, -2.0 * c.n) * std::pow(m.c_base, c.n);
    return std::abs(det - 1.0);
}

SemiFlatSample semiflat_assemble(const Eigen::MatrixXd& base) {
    const auto n = base.rows();
    if (n < 1 || base.cols() != n) throw ValidationError("base metric must be square");
    if (!base.isApprox(base.transpose(), 1e-12))
        throw ValidationError("base metric must be symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(base);
    if (llt.info() != Eigen::Success)
        throw ValidationError("base metric must be positive definite");

    SemiFlatSample s;
    s.base = base;
    s.J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    s.J.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    s.J.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    s.g = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    s.g.topLeftCorner(n, n) = base;
    s.g.bottomRightCorner(n, n) = base;
    return s;
}

}  // namespace sl3cv
