#include "sl3cv/rational.hpp"

#include <map>
#include <vector>

#include "sl3cv/errors.hpp"

namespace sl3cv {

Rational rat_parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ValidationError("cannot parse rational: '" + text + "'");
    if (q.get_den() == 0)
        throw ValidationError("zero denominator in rational: '" + text + "'");
    q.canonicalize();
    return q;
}

Integer int_parse(const std::string& text) {
    mpz_class z;
    if (z.set_str(text, 10) != 0)
        throw ValidationError("cannot parse integer: '" + text + "'");
    return z;
}

std::string rat_str(const Rational& q) {
    return q.get_str();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

bool integer_sqrt(const Integer& n, Integer& root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

bool rational_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    Integer rn, rd;
    if (!integer_sqrt(q.get_num(), rn) || !integer_sqrt(q.get_den(), rd)) return false;
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

namespace {

// Brent-cycle Pollard rho; n must be odd, composite, > 1.
Integer pollard_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer diff;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;  // cycle without factor; retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        out[n] += 1;
        return;
    }
    Integer r;
    if (integer_sqrt(n, r)) {
        std::map<Integer, unsigned> sub;
        factor_into(r, sub);
        for (auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::pair<Integer, Integer> square_free_decomposition(const Integer& m) {
    if (m < 1) throw ValidationError("square_free_decomposition requires m >= 1");
    Integer a = 1, b = 1;
    if (m == 1) return {a, b};
    Integer root;
    if (integer_sqrt(m, root)) return {Integer(1), root};

    // Trial division first; Pollard rho picks up whatever survives.
    Integer n = m;
    std::map<Integer, unsigned> exps;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) exps[p] += e;
    };
    strip(2);
    strip(3);
    for (Integer p = 5; p * p <= n && p < 100000; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) {
        if (n < Integer(100000) * 100000)
            exps[n] += 1;  // below the trial bound squared, so prime
        else
            factor_into(n, exps);
    }
    for (auto& [p, e] : exps) {
        if (e % 2) a *= p;
        for (unsigned i = 0; i < e / 2; ++i) b *= p;
    }
    return {a, b};
}

}  // namespace sl3cv
