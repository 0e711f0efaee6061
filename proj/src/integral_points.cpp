#include "sl3cv/integral_points.hpp"

#include <algorithm>
#include <thread>

namespace sl3cv {

bool verify_diophantine(const Integer& k, const Integer& l, const Integer& m) {
    if (k < 1 || l < 1 || m < 1) return false;
    Integer w = 3 * k + l + 3;
    if (w * w != m * (k * l - k * k * k - 1)) return false;
    return k * l > k * k * k + 1;  // l > k^2 + 1/k, cleared of denominators
}

DiophantineTriple hitchin_recursion(unsigned n) {
    if (n < 1) throw ValidationError("recursion index must be >= 1");
    Integer u_prev = 1, u_curr = 2;
    for (unsigned i = 1; i < n; ++i) {
        Integer next = 23 * u_curr - u_prev - 4;
        u_prev = u_curr;
        u_curr = next;
    }
    Integer u_next = 23 * u_curr - u_prev - 4;
    DiophantineTriple t;
    t.k = u_curr;
    t.l = u_curr * u_curr + u_prev;
    t.m = (u_next + 2) * (u_curr + 2) + 24;
    if (!verify_diophantine(t.k, t.l, t.m))
        throw ValidationError("recursion produced an invalid triple");
    return t;
}

IntegralWitness c1_family(long n) {
    Rational nr(n);
    Rational w = 3 + 3 * nr + nr * nr;
    Mat3 g1 = Mat3::identity();
    g1(0, 1) = w;
    g1(1, 2) = w;
    Mat3 g2;
    g2(0, 2) = -1;
    g2(1, 0) = 1;
    g2(1, 2) = 3 + nr;
    g2(2, 0) = -nr;
    g2(2, 1) = -1;
    g2(2, 2) = 3;
    RepPair rep{SL3Matrix(g1), SL3Matrix(g2)};
    CharacterPoint ch = character_map(rep);
    CharacterPoint closed{3 - w * w, 3 - nr * w * w, 3 - nr * nr * w * w};
    if (!(ch == closed)) throw ValidationError("family character mismatch");
    return IntegralWitness{n, rep, ch, classify_component(ch)};
}

IntegralWitness c2_rep(const DiophantineTriple& t) {
    if (!verify_diophantine(t.k, t.l, t.m)) throw ValidationError("invalid triple");
    Rational k(t.k), l(t.l), m(t.m);
    Rational w = 3 * k + l + 3;

    Mat3 g1 = unipotent_jordan_full();
    Mat3 g2;
    g2(0, 1) = w / m;
    g2(0, 2) = -(k * k + 3 * k + 3) / m;
    g2(1, 1) = -k;
    g2(1, 2) = -(w - k * m) / m;
    g2(2, 0) = m;
    g2(2, 2) = 3 + k;

    auto [a, b] = square_free_decomposition(t.m);
    if (Integer(t.k * 3 + t.l + 3) % (a * b) != 0)
        throw DivisibilityError("ab does not divide 3k+l+3");
    Mat3 conj;  // diag-ish gauge (b/m, 1, b) with the (1,3) correction bk/m
    conj(0, 0) = Rational(b) / m;
    conj(0, 2) = Rational(b) * k / m;
    conj(1, 1) = 1;
    conj(2, 2) = Rational(b);
    Mat3 conj_inv = conj.inverse();

    RepPair rep(SL3Matrix(conj_inv * g1 * conj), SL3Matrix(conj_inv * g2 * conj));
    if (!is_integral(rep)) throw DivisibilityError("conjugated pair is not integral");
    CharacterPoint ch = character_map(rep);
    CharacterPoint closed{3 + k * m, 3 + m, 3 + l * m};
    if (!(ch == closed)) throw ValidationError("family character mismatch");
    ComponentLabel comp = classify_component(ch);
    if (comp != ComponentLabel::C2) throw ValidationError("triple left the Hitchin component");
    return IntegralWitness{t, rep, ch, comp};
}

namespace {

void scan_rows(long x_lo, long x_hi, long y_lo, long y_hi,
               std::vector<std::pair<CharacterPoint, ComponentLabel>>& out) {
    for (long x = x_lo; x <= x_hi; ++x)
        for (long y = y_lo; y <= y_hi; ++y) {
            // Monic integer quadratic in z: rational roots are integers.
            auto roots = solve_z(Rational(x), Rational(y));
            if (roots.size() == 2 && roots[0] == roots[1]) roots.pop_back();
            for (const Rational& z : roots) {
                CharacterPoint p{Rational(x), Rational(y), z};
                out.emplace_back(p, classify_component(p));
            }
        }
}

}  // namespace

std::vector<std::pair<CharacterPoint, ComponentLabel>> scan_integer_points(
    long x_lo, long x_hi, long y_lo, long y_hi, int threads) {
    std::vector<std::pair<CharacterPoint, ComponentLabel>> all;
    if (x_lo > x_hi || y_lo > y_hi) return all;
    if (threads <= 1) {
        scan_rows(x_lo, x_hi, y_lo, y_hi, all);
    } else {
        long span = x_hi - x_lo + 1;
        int nw = static_cast<int>(std::min<long>(threads, span));
        std::vector<std::vector<std::pair<CharacterPoint, ComponentLabel>>> parts(nw);
        std::vector<std::thread> pool;
        for (int w = 0; w < nw; ++w) {
            long lo = x_lo + span * w / nw;
            long hi = x_lo + span * (w + 1) / nw - 1;
            pool.emplace_back(scan_rows, lo, hi, y_lo, y_hi, std::ref(parts[w]));
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts)
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.first.x != b.first.x) return a.first.x < b.first.x;
        if (a.first.y != b.first.y) return a.first.y < b.first.y;
        return a.first.z < b.first.z;
    });
    return all;
}

}  // namespace sl3cv
