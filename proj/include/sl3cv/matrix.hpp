#pragma once

#include <array>
#include <tuple>
#include <vector>

#include "sl3cv/errors.hpp"
#include "sl3cv/rational.hpp"

namespace sl3cv {

// Dense 3x3 matrix over a field F (Rational or GaussianRational).
template <class F>
struct Mat3T {
    std::array<F, 9> e{};

    F& operator()(int i, int j) { return e[3 * i + j]; }
    const F& operator()(int i, int j) const { return e[3 * i + j]; }

    static Mat3T identity() {
        Mat3T m;
        m(0, 0) = F(1);
        m(1, 1) = F(1);
        m(2, 2) = F(1);
        return m;
    }
    static Mat3T zero() { return Mat3T{}; }

    friend Mat3T operator*(const Mat3T& a, const Mat3T& b) {
        Mat3T c;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                F s = a(i, 0) * b(0, j);
                s += a(i, 1) * b(1, j);
                s += a(i, 2) * b(2, j);
                c(i, j) = s;
            }
        return c;
    }
    friend Mat3T operator+(const Mat3T& a, const Mat3T& b) {
        Mat3T c;
        for (int k = 0; k < 9; ++k) c.e[k] = a.e[k] + b.e[k];
        return c;
    }
    friend Mat3T operator-(const Mat3T& a, const Mat3T& b) {
        Mat3T c;
        for (int k = 0; k < 9; ++k) c.e[k] = a.e[k] - b.e[k];
        return c;
    }
    Mat3T operator-() const {
        Mat3T c;
        for (int k = 0; k < 9; ++k) c.e[k] = -e[k];
        return c;
    }
    friend Mat3T operator*(const F& s, const Mat3T& a) {
        Mat3T c;
        for (int k = 0; k < 9; ++k) c.e[k] = s * a.e[k];
        return c;
    }
    friend bool operator==(const Mat3T& a, const Mat3T& b) { return a.e == b.e; }

    F trace() const { return e[0] + e[4] + e[8]; }
    F det() const {
        return e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
               e[2] * (e[3] * e[7] - e[4] * e[6]);
    }
    Mat3T transpose() const {
        Mat3T t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
        return t;
    }
    Mat3T adjugate() const {
        const auto& m = *this;
        Mat3T a;
        a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
        a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
        a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
        a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
        a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
        a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
        a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
        a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
        a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        return a;
    }
    Mat3T inverse() const {
        F d = det();
        if (d == F(0)) throw ValidationError("matrix is singular");
        Mat3T a = adjugate();
        F inv_d = F(1) / d;
        for (auto& x : a.e) x = inv_d * x;
        return a;
    }
    bool is_zero() const {
        for (const auto& x : e)
            if (!(x == F(0))) return false;
        return true;
    }
};

using Mat3 = Mat3T<Rational>;

struct Mat2 {
    std::array<Rational, 4> e{};
    Rational& operator()(int i, int j) { return e[2 * i + j]; }
    const Rational& operator()(int i, int j) const { return e[2 * i + j]; }
    Rational det() const { return e[0] * e[3] - e[1] * e[2]; }
    static Mat2 identity() {
        Mat2 m;
        m.e = {Rational(1), Rational(0), Rational(0), Rational(1)};
        return m;
    }
};

bool is_integral(const Mat3& m);

// Coefficients (c2, c1, c0) of det(lambda*I - A) = lambda^3 + c2*lambda^2 + c1*lambda + c0.
std::tuple<Rational, Rational, Rational> char_poly(const Mat3& a);

// Determinant-one matrices; the determinant is validated once at the boundary,
// products and inverses preserve it by algebra.
class SL3Matrix {
  public:
    explicit SL3Matrix(Mat3 m) : m_(std::move(m)) {
        if (!(m_.det() == Rational(1))) throw ValidationError("determinant is not 1");
    }
    static SL3Matrix unchecked(Mat3 m) { return SL3Matrix(std::move(m), unchecked_tag{}); }
    static SL3Matrix identity() { return unchecked(Mat3::identity()); }

    const Mat3& mat() const { return m_; }

    SL3Matrix inverse() const { return unchecked(m_.adjugate()); }  // det == 1
    friend SL3Matrix operator*(const SL3Matrix& a, const SL3Matrix& b) {
        return unchecked(a.m_ * b.m_);
    }
    friend bool operator==(const SL3Matrix& a, const SL3Matrix& b) { return a.m_ == b.m_; }

  private:
    struct unchecked_tag {};
    SL3Matrix(Mat3 m, unchecked_tag) : m_(std::move(m)) {}
    Mat3 m_;
};

// tr A = tr A^2 = 3, equivalent to characteristic polynomial (lambda-1)^3.
bool is_unipotent(const SL3Matrix& a);

// Least k in {1,2,3} with (A-I)^k = 0. Throws on non-unipotent input.
int unipotency_index(const SL3Matrix& a);

// The two nontrivial unipotent Jordan forms.
Mat3 unipotent_jordan_full();     // one Jordan block, (A-I)^2 != 0
Mat3 unipotent_jordan_partial();  // geometric multiplicity two

// Nullspace basis of an m x n system over F (rows of coefficients).
template <class F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> rows, int ncols) {
    const int m = static_cast<int>(rows.size());
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < ncols && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (!(rows[i][c] == F(0))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        F inv = F(1) / rows[r][c];
        for (int j = 0; j < ncols; ++j) rows[r][j] = inv * rows[r][j];
        for (int i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == F(0)) continue;
            F f = rows[i][c];
            for (int j = 0; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < ncols; ++c) {
        bool is_pivot = false;
        for (int pc : pivot_cols)
            if (pc == c) is_pivot = true;
        if (is_pivot) continue;
        std::vector<F> v(ncols, F(0));
        v[c] = F(1);
        for (size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sl3cv
