#include "sl3cv/matrix.hpp"

namespace sl3cv {

bool is_integral(const Mat3& m) {
    for (const auto& x : m.e)
        if (!is_integer(x)) return false;
    return true;
}

std::tuple<Rational, Rational, Rational> char_poly(const Mat3& a) {
    Rational t = a.trace();
    Rational t2 = (a * a).trace();
    return {-t, (t * t - t2) / 2, -a.det()};
}

bool is_unipotent(const SL3Matrix& a) {
    const Mat3& m = a.mat();
    return m.trace() == Rational(3) && (m * m).trace() == Rational(3);
}

int unipotency_index(const SL3Matrix& a) {
    if (!is_unipotent(a)) throw ValidationError("matrix is not unipotent");
    Mat3 n = a.mat() - Mat3::identity();
    if (n.is_zero()) return 1;
    Mat3 n2 = n * n;
    if (n2.is_zero()) return 2;
    if ((n2 * n).is_zero()) return 3;
    throw ValidationError("matrix is not unipotent");  // unreachable after the trace check
}

Mat3 unipotent_jordan_full() {
    Mat3 m = Mat3::identity();
    m(0, 1) = 1;
    m(1, 2) = 1;
    return m;
}

Mat3 unipotent_jordan_partial() {
    Mat3 m = Mat3::identity();
    m(1, 2) = 1;
    return m;
}

}  // namespace sl3cv
