#include "sl3cv/character_variety.hpp"

#include <cmath>

namespace sl3cv {

std::string to_string(ComponentLabel c) {
    return c == ComponentLabel::C1 ? "C1" : "C2";
}

Rational lawton_eval(const CharacterPoint& p) {
    const Rational &x = p.x, &y = p.y, &z = p.z;
    return 414 - 108 * x + x * x * x - 108 * y + 21 * x * y + y * y * y -
           (51 - 9 * x - 9 * y + x * y) * z + z * z;
}

double lawton_eval(double x, double y, double z) {
    return 414 - 108 * x + x * x * x - 108 * y + 21 * x * y + y * y * y -
           (51 - 9 * x - 9 * y + x * y) * z + z * z;
}

bool on_surface(const CharacterPoint& p) {
    return lawton_eval(p) == 0;
}

bool on_surface(double x, double y, double z) {
    double tol = 1e-9 * (1 + std::abs(x * x * x) + std::abs(y * y * y) + z * z);
    return std::abs(lawton_eval(x, y, z)) < tol;
}

CharacterPoint psi(const ParamPoint& p) {
    const Rational &s = p.s, &t = p.t;
    Rational den = s * t - s * s * s - 1;
    if (den == 0) throw SingularParameterError("psi is undefined on st - s^3 - 1 = 0");
    Rational w = 3 + 3 * s + t;
    Rational r = w * w / den;
    return {3 + r, 3 + s * r, 3 + t * r};
}

std::vector<Rational> solve_z(const Rational& x, const Rational& y) {
    // P(x, y, z) = z^2 - B z + C
    Rational B = 51 - 9 * x - 9 * y + x * y;
    Rational C = 414 - 108 * x + x * x * x - 108 * y + 21 * x * y + y * y * y;
    Rational disc = B * B - 4 * C;
    Rational root;
    if (!rational_sqrt(disc, root)) return {};
    return {(B - root) / 2, (B + root) / 2};
}

ComponentLabel classify_component(const CharacterPoint& p) {
    if (!on_surface(p)) throw OffSurfaceError("classify_component requires P(x,y,z) = 0");
    return (p.x > 3 && p.y > 3) ? ComponentLabel::C2 : ComponentLabel::C1;
}

CharacterPoint singular_locus() {
    return {3, 3, 3};
}

}  // namespace sl3cv
