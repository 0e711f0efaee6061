#pragma once

#include <optional>
#include <string>

#include "sl3cv/character_variety.hpp"
#include "sl3cv/matrix.hpp"

namespace sl3cv {

// Generator pair (a1, a2) of a thrice-punctured-sphere representation; the
// third boundary generator is (a2 a1)^{-1}. All three must be unipotent.
class RepPair {
  public:
    RepPair(SL3Matrix a1, SL3Matrix a2);

    const SL3Matrix& a1() const { return a1_; }
    const SL3Matrix& a2() const { return a2_; }
    SL3Matrix a3() const { return (a2_ * a1_).inverse(); }

    friend bool operator==(const RepPair& a, const RepPair& b) {
        return a.a1_ == b.a1_ && a.a2_ == b.a2_;
    }

  private:
    SL3Matrix a1_, a2_;
};

// (tr(a1 a2^{-1}), tr(a1^{-1} a2), tr(a1 a2 a1^{-1} a2^{-1})); always on-surface.
CharacterPoint character_map(const RepPair& r);

// Explicit inverse of the character map on the cubic surface. Throws
// OffSurfaceError off the surface and NotInFieldError when the y = 3 branch
// would need an irrational second generator.
RepPair invert_character(const CharacterPoint& p);

// The y = 3 branch scalar: b21 = (12 - 3x - z)/(3 - x), subject to b21^2 = 3 - x.
Rational degenerate_b21(const Rational& x, const Rational& z);

bool is_irreducible(const RepPair& r);

enum class NormalFormCase { Generic, Degenerate, Trivial };

struct NormalForm {
    NormalFormCase kind;
    std::optional<Rational> b21;  // Degenerate only
    Mat3 conjugator;              // g with g^{-1} a1 g, g^{-1} a2 g in normal form
    RepPair pair;
};

// Conjugates (a1, a2) to the normal form with a1 the full Jordan block.
// Requires unipotency index 3 for a1 and an irreducible pair.
NormalForm normalize_pair(const RepPair& r);

// Action of a determinant-one 2x2 matrix on the symmetric square basis
// (e1^2, e1 e2, e2^2).
SL3Matrix sym_square(const Mat2& m);

// Integral monodromy of the hyperbolic structure on the thrice-punctured
// sphere, lifted through the symmetric square; character (35, 35, 323).
RepPair uniformization_rep();

bool is_integral(const RepPair& r);

}  // namespace sl3cv
