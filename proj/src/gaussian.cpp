#include "sl3cv/gaussian.hpp"

namespace sl3cv {

std::string to_string(const GaussianRational& v) {
    if (v.im == 0) return rat_str(v.re);
    std::string s = rat_str(v.re);
    s += (v.im > 0) ? "+" : "-";
    Rational a = abs(v.im);
    if (a != 1) s += rat_str(a) + "*";
    s += "i";
    return s;
}

}  // namespace sl3cv
