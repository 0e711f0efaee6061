#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl3cv/matrix.hpp"
#include "sl3cv/rational.hpp"

using namespace sl3cv;

namespace {

Mat3 diag(const Rational& a, const Rational& b, const Rational& c) {
    Mat3 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

// Random integer unimodular matrix: a product of row shears keeps det = 1 exactly.
Mat3 random_unimodular(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 2), coeff(-3, 3);
    Mat3 g = Mat3::identity();
    for (int step = 0; step < 8; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        int c = coeff(rng);
        for (int k = 0; k < 3; ++k) g(i, k) = g(i, k) + Rational(c) * g(j, k);
    }
    return g;
}

}  // namespace

TEST_CASE("rational parsing and serialization") {
    CHECK(rat_str(rat_parse("22/7")) == "22/7");
    CHECK(rat_str(rat_parse("-10/4")) == "-5/2");
    CHECK(rat_str(rat_parse("42")) == "42");
    CHECK(is_integer(rat_parse("8/2")));
    CHECK_THROWS_AS(rat_parse("1/0"), ValidationError);
    CHECK_THROWS_AS(rat_parse("pi"), ValidationError);
}

TEST_CASE("products and inverses of determinant-one matrices") {
    SL3Matrix eye = SL3Matrix::identity();
    CHECK(eye * eye == eye);

    SL3Matrix a1(unipotent_jordan_full());
    CHECK(a1 * a1.inverse() == eye);

    // Symbolic inverse of the full Jordan block.
    Mat3 expect = Mat3::identity();
    expect(0, 1) = -1;
    expect(1, 2) = -1;
    expect(0, 2) = 1;
    CHECK(a1.inverse().mat() == expect);

    // Integer matrix with det 1 has an integer inverse (adjugate).
    Mat3 g2;
    g2.e = {Rational(0), Rational(1),  Rational(-7),  //
            Rational(0), Rational(-1), Rational(8),   //
            Rational(1), Rational(0),  Rational(4)};
    SL3Matrix b(g2);
    CHECK(is_integral(b.inverse().mat()));
    CHECK(b * b.inverse() == eye);

    CHECK_THROWS_AS(SL3Matrix(diag(2, 2, 2)), ValidationError);
}

TEST_CASE("characteristic polynomial coefficients") {
    auto [c2, c1, c0] = char_poly(Mat3::identity());
    CHECK(c2 == -3);
    CHECK(c1 == 3);
    CHECK(c0 == -1);

    auto [d2, d1, d0] = char_poly(unipotent_jordan_full());
    CHECK(d2 == -3);
    CHECK(d1 == 3);
    CHECK(d0 == -1);

    auto [e2, e1, e0] = char_poly(diag(2, 1, Rational(1, 2)));
    CHECK(e2 == Rational(-7, 2));
    CHECK(e1 == Rational(7, 2));
    CHECK(e0 == -1);
}

TEST_CASE("unipotency certificate and index") {
    SL3Matrix a1(unipotent_jordan_full());
    SL3Matrix a1t(unipotent_jordan_partial());
    CHECK(is_unipotent(a1));
    CHECK_FALSE(is_unipotent(SL3Matrix(diag(2, 1, Rational(1, 2)))));

    CHECK(unipotency_index(SL3Matrix::identity()) == 1);
    CHECK(unipotency_index(a1t) == 2);
    CHECK(unipotency_index(a1) == 3);
    CHECK_THROWS_AS(unipotency_index(SL3Matrix(diag(2, 1, Rational(1, 2)))),
                    ValidationError);
}

TEST_CASE("unipotency equals trace conditions equals nilpotent cube") {
    std::mt19937 rng(7);
    Mat3 a1 = unipotent_jordan_full();
    for (int trial = 0; trial < 1000; ++trial) {
        Mat3 g = random_unimodular(rng);
        Mat3 conj = g * a1 * g.adjugate();  // det g = 1, so adjugate is the inverse
        SL3Matrix m(conj);
        bool traces = is_unipotent(m);
        auto [c2, c1, c0] = char_poly(conj);
        bool cp = c2 == -3 && c1 == 3 && c0 == -1;
        Mat3 n = conj - Mat3::identity();
        bool cube = (n * n * n).is_zero();
        REQUIRE(traces);
        REQUIRE(cp);
        REQUIRE(cube);
    }
    // and all three fail together off the unipotent locus
    Mat3 d = diag(2, 1, Rational(1, 2));
    auto [c2, c1, c0] = char_poly(d);
    CHECK_FALSE(c2 == -3);
    CHECK_FALSE(((d - Mat3::identity()) * (d - Mat3::identity()) * (d - Mat3::identity()))
                    .is_zero());
}

TEST_CASE("square-free decomposition examples") {
    auto [a, b] = square_free_decomposition(196);
    CHECK(a == 1);
    CHECK(b == 14);
    auto [a1, b1] = square_free_decomposition(1);
    CHECK(a1 == 1);
    CHECK(b1 == 1);
    auto [a2, b2] = square_free_decomposition(40401);
    CHECK(a2 == 1);
    CHECK(b2 == 201);
    CHECK_THROWS_AS(square_free_decomposition(0), ValidationError);
}

TEST_CASE("square-free decomposition against trial-division oracle") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> dist(1, 1000000);
    for (int trial = 0; trial < 400; ++trial) {
        long m = dist(rng);
        auto [a, b] = square_free_decomposition(m);
        REQUIRE(a * b * b == m);
        // brute force: a has no square divisor > 1
        long av = a.get_si();
        for (long d = 2; d * d <= av; ++d) REQUIRE(av % (d * d) != 0);
    }
    // a value big enough to defeat naive trial division: a perfect square
    Integer huge = Integer("818940447716650784721");
    auto [ah, bh] = square_free_decomposition(huge);
    CHECK(ah == 1);
    CHECK(bh * bh == huge);
}
