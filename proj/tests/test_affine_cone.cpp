#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sl3cv/affine_cone.hpp"

using namespace sl3cv;

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(validate({2, 1, 1.0}), InvalidDomainError);   // 1 - r^3 = 0
    CHECK_THROWS_AS(validate({2, 1, 1.5}), InvalidDomainError);
    CHECK_THROWS_AS(validate({0, 1, 0.5}), InvalidDomainError);
    CHECK_THROWS_AS(validate({2, 2, 0.5}), InvalidDomainError);
    CHECK_NOTHROW(validate({2, -1, 3.0}));  // any r > 0 for the elliptic sign
}

TEST_CASE("potential behaves like -r near the tip") {
    for (int n : {1, 2, 3}) {
        double r = 1e-4;
        double v = phi({n, 1, r});
        CHECK(std::abs(v + r) < 1e-8);
    }
}

TEST_CASE("analytic derivative values") {
    CHECK(phi_derivative({2, 1, 0.5}) == doctest::Approx(-std::cbrt(7.0 / 8.0)).epsilon(1e-14));
    CHECK(phi_derivative({2, -1, 1.0}) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
}

TEST_CASE("metric coefficients") {
    MaCoeffs m = ma_metric_coeffs({2, 1, 0.5});
    CHECK(m.c_rr == doctest::Approx(std::pow(7.0 / 8.0, -2.0 / 3.0) / 4.0).epsilon(1e-14));
    CHECK(m.c_base == doctest::Approx(0.5 * std::cbrt(7.0 / 8.0)).epsilon(1e-14));

    MaCoeffs tip = ma_metric_coeffs({2, 1, 1e-6});
    CHECK(tip.c_rr < 1e-11);
    CHECK(tip.c_base < 1e-5);

    MaCoeffs edge = ma_metric_coeffs({2, 1, 0.999999});
    CHECK(edge.c_rr > 1e3);
    CHECK(edge.c_base < 0.02);
}

TEST_CASE("Monge-Ampere identity on spot checks") {
    CHECK(verify_monge_ampere({2, 1, 0.3}) < 1e-12);
    CHECK(verify_monge_ampere({2, -1, 0.7}) < 1e-12);
    CHECK(verify_monge_ampere({3, 1, 0.5}) < 1e-12);
}

TEST_CASE("Monge-Ampere identity across the sweep") {
    for (int n : {1, 2, 3})
        for (int H : {1, -1})
            for (int i = 0; i < 100; ++i) {
                double r = (i + 1) / 101.0;
                if (H == -1) r *= 2.0;
                REQUIRE(verify_monge_ampere({n, H, r}) < 1e-12);
            }
}

TEST_CASE("quadrature matches the analytic derivatives") {
    for (int n : {1, 2, 3})
        for (int H : {1, -1})
            for (int i = 0; i < 100; ++i) {
                double r = (i + 1) / 101.0;
                if (H == -1) r *= 2.0;
                ConeGeometry c{n, H, r};

                double h1 = 1e-5;
                double d1 = (phi({n, H, r + h1}) - phi({n, H, r - h1})) / (2 * h1);
                double e1 = phi_derivative(c);
                REQUIRE(std::abs(d1 - e1) <= 1e-6 * (1 + std::abs(e1)));

                double h2 = 2.5e-4;
                if (H == 1 && (r - 2 * h2 <= 0 || r + 2 * h2 >= 1)) continue;
                if (H == -1 && r - 2 * h2 <= 0) continue;
                double d2 = (-phi({n, H, r + 2 * h2}) + 16 * phi({n, H, r + h2}) - 30 * phi(c) +
                             16 * phi({n, H, r - h2}) - phi({n, H, r - 2 * h2})) /
                            (12 * h2 * h2);
                double e2 = phi_second_derivative(c);
                REQUIRE(e2 > 0);  // convexity
                REQUIRE(std::abs(d2 - e2) <= 1e-6 * (1 + std::abs(e2)));
            }
}

TEST_CASE("semi-flat block assembly") {
    SemiFlatSample s = semiflat_assemble(Eigen::MatrixXd::Identity(3, 3));
    CHECK(s.g.isApprox(Eigen::MatrixXd::Identity(6, 6)));
    CHECK((s.J * s.J).isApprox(-Eigen::MatrixXd::Identity(6, 6)));

    Eigen::MatrixXd bad(2, 2);
    bad << 1, 2, 2, 1;  // symmetric but indefinite
    CHECK_THROWS_AS(semiflat_assemble(bad), ValidationError);
    Eigen::MatrixXd asym(2, 2);
    asym << 1, 1, 0, 1;
    CHECK_THROWS_AS(semiflat_assemble(asym), ValidationError);
}

TEST_CASE("semi-flat invariants for random SPD bases") {
    std::mt19937 rng(47);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + trial % 3;
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
        Eigen::MatrixXd base = a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n);
        SemiFlatSample s = semiflat_assemble(base);
        REQUIRE((s.J * s.J + Eigen::MatrixXd::Identity(2 * n, 2 * n)).norm() == 0.0);
        REQUIRE((s.J.transpose() * s.g * s.J - s.g).norm() == 0.0);
        // the two-form g(J., .) vanishes on each summand
        Eigen::MatrixXd omega = s.g * s.J;
        REQUIRE(omega.topLeftCorner(n, n).norm() == 0.0);
        REQUIRE(omega.bottomRightCorner(n, n).norm() == 0.0);
    }

    // metric coefficients as a base sample: diag(c_rr, c_base, c_base)
    MaCoeffs m = ma_metric_coeffs({2, 1, 0.4});
    Eigen::Vector3d diag(m.c_rr, m.c_base, m.c_base);
    SemiFlatSample s = semiflat_assemble(diag.asDiagonal());
    std::mt19937 rng2(53);
    std::normal_distribution<double> g2(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::VectorXd v(6), w(6);
        for (int i = 0; i < 6; ++i) {
            v(i) = g2(rng2);
            w(i) = g2(rng2);
        }
        double lhs = (s.J * v).transpose() * s.g * (s.J * w);
        double rhs = v.transpose() * s.g * w;
        REQUIRE(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}
