#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl3cv/integral_points.hpp"

using namespace sl3cv;

TEST_CASE("diophantine constraint") {
    CHECK(verify_diophantine(2, 5, 196));
    CHECK(verify_diophantine(41, 1683, 40401));
    CHECK_FALSE(verify_diophantine(2, 5, 195));
    CHECK_FALSE(verify_diophantine(1, 1, 1));  // l > k^2 + 1/k fails
}

TEST_CASE("recursion values") {
    DiophantineTriple t1 = hitchin_recursion(1);
    CHECK(t1.k == 2);
    CHECK(t1.l == 5);
    CHECK(t1.m == 196);

    DiophantineTriple t2 = hitchin_recursion(2);
    CHECK(t2.k == 41);
    CHECK(t2.l == 1683);
    CHECK(t2.m == 40401);
    CHECK(Integer(1809) * 1809 == t2.m * 81);

    DiophantineTriple t3 = hitchin_recursion(3);
    CHECK(t3.k == 937);
    CHECK(t3.l == 878010);
    // u4 = 23*937 - 41 - 4
    CHECK(t3.m == (Integer(21506) + 2) * (937 + 2) + 24);

    CHECK_THROWS_AS(hitchin_recursion(0), ValidationError);
}

TEST_CASE("auxiliary recursion invariant stays at zero") {
    // b_n = 29 + u_n^2 + u_n (4 - 23 u_{n-1}) + u_{n-1}(4 + u_{n-1}) vanishes,
    // which is what makes every triple exact.
    Integer u_prev = 1, u_curr = 2;
    for (int n = 1; n <= 10; ++n) {
        Integer b = 29 + u_curr * u_curr + u_curr * (4 - 23 * u_prev) + u_prev * (4 + u_prev);
        CHECK(b == 0);
        Integer next = 23 * u_curr - u_prev - 4;
        u_prev = u_curr;
        u_curr = next;
    }
}

TEST_CASE("triples verify and grow for n = 1..8") {
    Integer last_k = 0, last_l = 0;
    for (unsigned n = 1; n <= 8; ++n) {
        DiophantineTriple t = hitchin_recursion(n);
        REQUIRE(verify_diophantine(t.k, t.l, t.m));
        REQUIRE(t.k > last_k);
        REQUIRE(t.l > last_l);
        last_k = t.k;
        last_l = t.l;
    }
}

TEST_CASE("trivial-component family members") {
    IntegralWitness w1 = c1_family(1);
    CHECK(w1.character == CharacterPoint{-46, -46, -46});
    Mat3 expect_g2;
    expect_g2.e = {Rational(0),  Rational(0),  Rational(-1),  //
                   Rational(1),  Rational(0),  Rational(4),   //
                   Rational(-1), Rational(-1), Rational(3)};
    CHECK(w1.rep.a2().mat() == expect_g2);
    CHECK(w1.component == ComponentLabel::C1);

    CHECK(c1_family(0).character == CharacterPoint{-6, 3, 3});
    CHECK(c1_family(-1).character == CharacterPoint{2, 4, 2});
}

TEST_CASE("trivial-component family properties over [-10, 10]") {
    std::vector<CharacterPoint> chars;
    for (long n = -10; n <= 10; ++n) {
        IntegralWitness w = c1_family(n);
        REQUIRE(is_integral(w.rep));
        REQUIRE(unipotency_index(w.rep.a1()) == 3);
        REQUIRE(unipotency_index(w.rep.a2()) == 3);
        REQUIRE(unipotency_index(w.rep.a3()) == 3);
        REQUIRE(is_irreducible(w.rep));
        REQUIRE(on_surface(w.character));
        REQUIRE(w.component == ComponentLabel::C1);
        REQUIRE(w.character == psi({Rational(n), Rational(n) * Rational(n)}));
        chars.push_back(w.character);
    }
    for (size_t i = 0; i < chars.size(); ++i)
        for (size_t j = i + 1; j < chars.size(); ++j) REQUIRE_FALSE(chars[i] == chars[j]);
}

TEST_CASE("Hitchin-component representative for (2, 5, 196)") {
    IntegralWitness w = c2_rep({2, 5, 196});
    Mat3 g1;
    g1.e = {Rational(1), Rational(14), Rational(0),   //
            Rational(0), Rational(1),  Rational(14),  //
            Rational(0), Rational(0),  Rational(1)};
    CHECK(w.rep.a1().mat() == g1);
    Mat3 g2;
    g2.e = {Rational(-2), Rational(1),  Rational(-27),  //
            Rational(0),  Rational(-2), Rational(27),   //
            Rational(1),  Rational(0),  Rational(7)};
    CHECK(w.rep.a2().mat() == g2);
    CHECK(w.character == CharacterPoint{395, 199, 983});
    CHECK(w.component == ComponentLabel::C2);

    CHECK_THROWS_AS(c2_rep({2, 5, 195}), ValidationError);
}

TEST_CASE("Hitchin-component witnesses for n = 1..8") {
    for (unsigned n = 1; n <= 8; ++n) {
        IntegralWitness w = c2_rep(hitchin_recursion(n));
        REQUIRE(is_integral(w.rep));
        REQUIRE(unipotency_index(w.rep.a1()) == 3);
        REQUIRE(unipotency_index(w.rep.a2()) == 3);
        REQUIRE(unipotency_index(w.rep.a3()) == 3);
        REQUIRE(on_surface(w.character));
        REQUIRE(w.character.x >= 9);
        REQUIRE(w.character.y >= 9);
        REQUIRE(w.component == ComponentLabel::C2);
        REQUIRE(w.character == character_map(w.rep));
    }
}

TEST_CASE("integer-point scan") {
    auto hits = scan_integer_points(35, 35, 99, 99);
    REQUIRE(hits.size() == 2);  // the fiber quadratic has a second integer root
    CHECK(hits[0].first == CharacterPoint{35, 99, 643});
    CHECK(hits[0].second == ComponentLabel::C2);
    CHECK(hits[1].first == CharacterPoint{35, 99, 1667});

    auto singular = scan_integer_points(3, 3, 3, 3);
    REQUIRE(singular.size() == 1);
    CHECK(singular[0].first == CharacterPoint{3, 3, 3});

    auto pair = scan_integer_points(84, 84, 84, 84);
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].first == CharacterPoint{84, 84, 246});
    CHECK(pair[1].first == CharacterPoint{84, 84, 5349});

    auto empty = scan_integer_points(10, 5, 0, 0);
    CHECK(empty.empty());
}

TEST_CASE("scan output is deterministic under threading") {
    auto serial = scan_integer_points(-50, 50, -50, 50, 1);
    auto parallel = scan_integer_points(-50, 50, -50, 50, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        REQUIRE(serial[i].first == parallel[i].first);
        REQUIRE(serial[i].second == parallel[i].second);
    }
    // sorted lexicographically
    for (size_t i = 1; i < serial.size(); ++i) {
        const auto &a = serial[i - 1].first, &b = serial[i].first;
        bool le = a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && a.z < b.z)));
        REQUIRE(le);
    }
}
