#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "sl3cv/betti.hpp"
#include "sl3cv/character_variety.hpp"

namespace sl3cv {

// (k, l, m) with (3k + l + 3)^2 = m(kl - k^3 - 1) and l > k^2 + 1/k.
struct DiophantineTriple {
    Integer k, l, m;
};

bool verify_diophantine(const Integer& k, const Integer& l, const Integer& m);

// n-th triple of the recursion u_{n+1} = 23 u_n - u_{n-1} - 4, u_0 = 1, u_1 = 2:
// k_n = u_n, l_n = u_n^2 + u_{n-1}, m_n = (u_{n+1} + 2)(u_n + 2) + 24. Needs n >= 1.
DiophantineTriple hitchin_recursion(unsigned n);

// An integral representation together with the certificates that matter:
// generator pair with integer entries, its character, and the component label.
struct IntegralWitness {
    std::variant<long, DiophantineTriple> source;
    RepPair rep;
    CharacterPoint character;
    ComponentLabel component;
};

// Family in the component of the trivial representation; character psi(n, n^2).
IntegralWitness c1_family(long n);

// Hitchin-component representation built from a valid triple, conjugated into
// integer form through m = a b^2. Throws DivisibilityError when ab does not
// divide 3k + l + 3 (an invalid triple).
IntegralWitness c2_rep(const DiophantineTriple& t);

// All integer points of the surface in the box, found by rooting the quadratic
// in z column by column; lexicographically sorted, deterministic under threading.
std::vector<std::pair<CharacterPoint, ComponentLabel>> scan_integer_points(
    long x_lo, long x_hi, long y_lo, long y_hi, int threads = 1);

}  // namespace sl3cv
