#include "sl3cv/betti.hpp"

namespace sl3cv {

RepPair::RepPair(SL3Matrix a1, SL3Matrix a2) : a1_(std::move(a1)), a2_(std::move(a2)) {
    if (!is_unipotent(a1_) || !is_unipotent(a2_) || !is_unipotent((a2_ * a1_).inverse()))
        throw ValidationError("generator pair violates the unipotency constraint");
}

CharacterPoint character_map(const RepPair& r) {
    const SL3Matrix &a1 = r.a1(), &a2 = r.a2();
    SL3Matrix a1i = a1.inverse(), a2i = a2.inverse();
    Rational x = (a1.mat() * a2i.mat()).trace();
    Rational y = (a1i.mat() * a2.mat()).trace();
    Rational z = (a1.mat() * a2.mat() * a1i.mat() * a2i.mat()).trace();
    return {x, y, z};
}

Rational degenerate_b21(const Rational& x, const Rational& z) {
    if (x == 3) throw ValidationError("degenerate branch needs x != 3");
    return (12 - 3 * x - z) / (3 - x);
}

namespace {

// Second generator for y != 3, entries rational in the point.
Mat3 generic_second_generator(const Rational& x, const Rational& y, const Rational& z) {
    Rational d = y - 3;
    Mat3 m;
    m(0, 0) = 0;
    m(0, 1) = (3 * x + 3 * y + z - 21) / (d * d);
    m(0, 2) = -(63 + x * x - 15 * x - 27 * y + 3 * x * y + 3 * y * y) / (d * d * d);
    m(1, 0) = 0;
    m(1, 1) = -(x - 3) / d;
    m(1, 2) = (30 - 6 * x - 6 * y + x * y - z) / (d * d);
    m(2, 0) = d;
    m(2, 1) = 0;
    m(2, 2) = 3 + (x - 3) / d;
    return m;
}

// Second generator for y = 3, parametrized by b21 with x = 3 - b21^2,
// z = 3 + 3 b21^2 - b21^3.
Mat3 degenerate_second_generator(const Rational& b) {
    Mat3 m;
    m(0, 0) = 0;
    m(0, 1) = 3 - 3 / b - b;
    m(0, 2) = (b - 1) * (b - 1) * (b - 1) / (b * b);
    m(1, 0) = b;
    m(1, 1) = 3 - b;
    m(1, 2) = 0;
    m(2, 0) = 0;
    m(2, 1) = -b;
    m(2, 2) = b;
    return m;
}

}  // namespace

RepPair invert_character(const CharacterPoint& p) {
    if (!on_surface(p)) throw OffSurfaceError("point is not on the cubic surface");
    if (p.x == 3 && p.y == 3)  // then z = 3 on the surface: trivial representation
        return RepPair(SL3Matrix::identity(), SL3Matrix::identity());
    SL3Matrix a1(unipotent_jordan_full());
    RepPair result = [&] {
        if (p.y != 3) return RepPair(a1, SL3Matrix(generic_second_generator(p.x, p.y, p.z)));
        Rational b = degenerate_b21(p.x, p.z);
        if (!(b * b == 3 - p.x))
            throw NotInFieldError("y = 3 branch needs an irrational matrix entry");
        return RepPair(a1, SL3Matrix(degenerate_second_generator(b)));
    }();
    // The fiber quadratic has two roots and only one commutator trace; the
    // round-trip check picks out the consistent branch.
    if (!(character_map(result) == p))
        throw ValidationError("constructed pair does not realize the character");
    return result;
}

bool is_irreducible(const RepPair& r) {
    return !(character_map(r) == singular_locus());
}

namespace {

// One-dimensional space of intertwiners g with l*g = g*r for both generator
// pairs; scale fixed by making the first nonzero entry 1 (g11 = 1 when g11 != 0).
Mat3 solve_intertwiner(const Mat3& l1, const Mat3& r1, const Mat3& l2, const Mat3& r2) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(18);
    auto add_equations = [&rows](const Mat3& l, const Mat3& r) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                std::vector<Rational> row(9, Rational(0));
                for (int k = 0; k < 3; ++k) {
                    row[3 * i + k] += -r(k, j);  // -(g r)_{ij}
                    row[3 * k + j] += l(i, k);   //  (l g)_{ij}
                }
                rows.push_back(std::move(row));
            }
    };
    add_equations(l1, r1);
    add_equations(l2, r2);
    auto basis = nullspace(std::move(rows), 9);
    if (basis.size() != 1)
        throw ValidationError("intertwiner space is not one-dimensional");
    Mat3 g;
    for (int k = 0; k < 9; ++k) g.e[k] = basis[0][k];
    Rational scale(0);
    for (int k = 0; k < 9; ++k)
        if (g.e[k] != 0) {
            scale = 1 / g.e[k];
            break;
        }
    for (auto& x : g.e) x = scale * x;
    return g;
}

}  // namespace

NormalForm normalize_pair(const RepPair& r) {
    if (unipotency_index(r.a1()) != 3)
        throw UnsupportedJordanTypeError("first generator must be maximally unipotent");
    CharacterPoint ch = character_map(r);
    if (ch == singular_locus()) throw ReducibleError("pair fixes a common line");
    RepPair nf = invert_character(ch);
    Mat3 g = solve_intertwiner(r.a1().mat(), nf.a1().mat(), r.a2().mat(), nf.a2().mat());
    if (g.det() == 0) throw ValidationError("intertwiner is singular");
    Mat3 gi = g.inverse();
    if (!(gi * r.a1().mat() * g == nf.a1().mat()) || !(gi * r.a2().mat() * g == nf.a2().mat()))
        throw ValidationError("conjugator does not transport the pair");
    NormalFormCase kind = (ch.y != 3) ? NormalFormCase::Generic : NormalFormCase::Degenerate;
    std::optional<Rational> b21;
    if (kind == NormalFormCase::Degenerate) b21 = degenerate_b21(ch.x, ch.z);
    return NormalForm{kind, b21, g, nf};
}

SL3Matrix sym_square(const Mat2& m) {
    if (!(m.det() == Rational(1))) throw ValidationError("sym_square needs det = 1");
    const Rational &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
    Mat3 s;
    s(0, 0) = a * a;
    s(0, 1) = a * b;
    s(0, 2) = b * b;
    s(1, 0) = 2 * a * c;
    s(1, 1) = a * d + b * c;
    s(1, 2) = 2 * b * d;
    s(2, 0) = c * c;
    s(2, 1) = c * d;
    s(2, 2) = d * d;
    return SL3Matrix(s);
}

RepPair uniformization_rep() {
    Mat3 g1, g2;
    g1.e = {Rational(1), Rational(2), Rational(0),   //
            Rational(0), Rational(1), Rational(16),  //
            Rational(0), Rational(0), Rational(1)};
    g2.e = {Rational(0),  Rational(1),  Rational(-7),  //
            Rational(0),  Rational(-1), Rational(8),   //
            Rational(1),  Rational(0),  Rational(4)};
    return RepPair(SL3Matrix(g1), SL3Matrix(g2));
}

bool is_integral(const RepPair& r) {
    return is_integral(r.a1().mat()) && is_integral(r.a2().mat());
}

}  // namespace sl3cv
