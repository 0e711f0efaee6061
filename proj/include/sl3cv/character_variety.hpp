#pragma once

#include <string>
#include <vector>

#include "sl3cv/matrix.hpp"
#include "sl3cv/rational.hpp"

namespace sl3cv {

enum class ComponentLabel { C1, C2 };

std::string to_string(ComponentLabel c);

// A point of the trace-coordinate space; on-surface means P(x,y,z) = 0.
struct CharacterPoint {
    Rational x, y, z;
    friend bool operator==(const CharacterPoint& a, const CharacterPoint& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

// Parameters of the birational map psi; st - s^3 - 1 = 0 is its singular locus.
struct ParamPoint {
    Rational s, t;
};

// Lawton's cubic: 414 - 108x + x^3 - 108y + 21xy + y^3 - (51 - 9x - 9y + xy)z + z^2.
Rational lawton_eval(const CharacterPoint& p);
double lawton_eval(double x, double y, double z);

bool on_surface(const CharacterPoint& p);
// Scale-aware tolerance |P| < 1e-9 * (1 + |x|^3 + |y|^3 + |z|^2).
bool on_surface(double x, double y, double z);

// psi(s,t) = (3 + r, 3 + s r, 3 + t r) with r = (3 + 3s + t)^2 / (st - s^3 - 1).
CharacterPoint psi(const ParamPoint& p);

// Rational roots z of P(x, y, z) = 0, ascending; a double root appears twice.
std::vector<Rational> solve_z(const Rational& x, const Rational& y);

// C2 iff x > 3 and y > 3; the boundary belongs to C1. Requires an on-surface point.
ComponentLabel classify_component(const CharacterPoint& p);

CharacterPoint singular_locus();  // (3,3,3)

}  // namespace sl3cv
