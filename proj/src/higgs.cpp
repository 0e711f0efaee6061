#include "sl3cv/higgs.hpp"

#include <random>
#include <vector>

namespace sl3cv {

HiggsFamily HiggsFamily::cyclic(GaussianRational q) {
    return HiggsFamily{HiggsFamilyKind::CyclicQ, std::move(q), {}, {}, {}};
}

HiggsFamily HiggsFamily::gen1(GaussianRational alpha, GaussianRational beta) {
    if (alpha.is_zero() && (beta.is_zero() || beta == GaussianRational(-1)))
        throw ValidationError("(alpha, beta) in {(0,0), (0,-1)} is excluded");
    // The residue matrix has 1/beta and 1/(1+beta) entries, so the
    // poles beta = 0, -1 are rejected for any alpha.
    if (beta.is_zero() || beta == GaussianRational(-1))
        throw ValidationError("beta in {0, -1} lies on a pole of the residue data");
    return HiggsFamily{HiggsFamilyKind::GenI, {}, std::move(alpha), std::move(beta), {}};
}

namespace {

HiggsFamily make_xi(HiggsFamilyKind kind, GaussianRational xi) {
    if (xi.is_zero()) throw ValidationError("xi = 0 is excluded");
    return HiggsFamily{kind, {}, {}, {}, std::move(xi)};
}

Mat3c from_rows(std::array<std::array<GaussianRational, 3>, 3> rows) {
    Mat3c m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = std::move(rows[i][j]);
    return m;
}

}  // namespace

HiggsFamily HiggsFamily::gen2(GaussianRational xi) {
    return make_xi(HiggsFamilyKind::GenII, std::move(xi));
}
HiggsFamily HiggsFamily::gen3(GaussianRational xi) {
    return make_xi(HiggsFamilyKind::GenIII, std::move(xi));
}
HiggsFamily HiggsFamily::gen4(GaussianRational xi) {
    return make_xi(HiggsFamilyKind::GenIV, std::move(xi));
}

ResidueData build_family(const HiggsFamily& f) {
    const GaussianRational one(1), zero;
    ResidueData d;
    switch (f.kind) {
        case HiggsFamilyKind::CyclicQ: {
            // Strictly upper shape with nonzero residues of the off-diagonal
            // sections; the cubic coefficient q is residue-free and does not
            // appear. Normalization: residue 1 at both finite punctures.
            Mat3c shape = from_rows({{{zero, one, zero}, {zero, zero, one}, {zero, zero, zero}}});
            d.r1 = shape;
            d.r2 = shape;
            break;
        }
        case HiggsFamilyKind::GenI: {
            const GaussianRational &a = f.alpha, &b = f.beta;
            d.r1 = from_rows({{{zero, a * (b + one), a * b},
                               {zero, a, a},
                               {zero, -a, -a}}});
            d.r2 = from_rows({{{-a, zero, -(a * b)},
                               {-(a / (one + b)), zero, -a},
                               {a / b, zero, a}}});
            break;
        }
        case HiggsFamilyKind::GenII:
            d.r1 = from_rows({{{zero, one, zero}, {zero, zero, one}, {zero, zero, zero}}});
            d.r2 = from_rows({{{zero, zero, zero}, {zero, zero, -one}, {f.xi, zero, zero}}});
            break;
        case HiggsFamilyKind::GenIII:
            d.r1 = from_rows({{{zero, zero, one}, {zero, zero, zero}, {zero, one, zero}}});
            d.r2 = from_rows({{{zero, zero, -one}, {f.xi, zero, zero}, {zero, zero, zero}}});
            break;
        case HiggsFamilyKind::GenIV:
            d.r1 = from_rows({{{zero, zero, f.xi}, {zero, zero, zero}, {zero, one, zero}}});
            d.r2 = from_rows({{{zero, zero, zero}, {zero, zero, -f.xi}, {one, zero, zero}}});
            break;
    }
    d.r3 = -(d.r1 + d.r2);
    return d;
}

namespace {

NilpotencyReport report_one(const Mat3c& r) {
    Mat3c r2 = r * r, r3 = r2 * r;
    NilpotencyReport rep;
    rep.traces_vanish =
        r.trace().is_zero() && r2.trace().is_zero() && r3.trace().is_zero();
    if (r.is_zero())
        rep.index = 1;
    else if (r2.is_zero())
        rep.index = 2;
    else if (r3.is_zero())
        rep.index = 3;
    else
        rep.index = 0;
    return rep;
}

Mat3c vec_to_mat(const std::vector<GaussianRational>& v) {
    Mat3c m;
    for (int k = 0; k < 9; ++k) m.e[k] = v[k];
    return m;
}

// Exact cube root of a rational, when it exists.
bool rational_cbrt(const Rational& q, Rational& root) {
    Integer n = q.get_num(), d = q.get_den(), rn, rd;
    bool neg = n < 0;
    if (neg) n = -n;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3) == 0) return false;
    root = Rational(neg ? -rn : rn, rd);
    root.canonicalize();
    return true;
}

}  // namespace

std::array<NilpotencyReport, 3> check_nilpotency(const ResidueData& d) {
    return {report_one(d.r1), report_one(d.r2), report_one(d.r3)};
}

std::optional<Mat3c> real_criterion(const ResidueData& d, unsigned seed) {
    // g r = r^t g for the residues at the first two punctures; the third
    // follows from r3 = -(r1 + r2). Unknowns: g row-major.
    std::vector<std::vector<GaussianRational>> rows;
    rows.reserve(18);
    for (const Mat3c* r : {&d.r1, &d.r2}) {
        Mat3c rt = r->transpose();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                std::vector<GaussianRational> row(9);
                for (int k = 0; k < 3; ++k) {
                    row[3 * i + k] += (*r)(k, j);
                    row[3 * k + j] += -rt(i, k);
                }
                rows.push_back(std::move(row));
            }
    }
    auto basis = nullspace(std::move(rows), 9);
    if (basis.empty()) return std::nullopt;

    std::optional<Mat3c> found;
    for (const auto& v : basis) {
        Mat3c g = vec_to_mat(v);
        if (!g.det().is_zero()) {
            found = g;
            break;
        }
    }
    if (!found && basis.size() > 1) {
        // Invertibility is generic on the solution space; pair sums first,
        // then a seeded random combination.
        for (size_t i = 0; !found && i < basis.size(); ++i)
            for (size_t j = i + 1; !found && j < basis.size(); ++j) {
                std::vector<GaussianRational> v(9);
                for (int k = 0; k < 9; ++k) v[k] = basis[i][k] + basis[j][k];
                Mat3c g = vec_to_mat(v);
                if (!g.det().is_zero()) found = g;
            }
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> coeff(1, 97);
        for (int attempt = 0; !found && attempt < 64; ++attempt) {
            std::vector<GaussianRational> v(9);
            for (const auto& b : basis) {
                GaussianRational c(Rational(coeff(rng)));
                for (int k = 0; k < 9; ++k) v[k] += c * b[k];
            }
            Mat3c g = vec_to_mat(v);
            if (!g.det().is_zero()) found = g;
        }
    }
    if (!found) return std::nullopt;

    Mat3c g = *found;
    GaussianRational det = g.det();
    Rational lambda;
    if (det.is_real() && rational_cbrt(1 / det.re, lambda)) {
        GaussianRational s(lambda);
        for (auto& x : g.e) x = s * x;
    } else {
        // det = 1 needs a cube root outside Q(i); fall back to the
        // first-nonzero-entry gauge.
        GaussianRational s;
        for (const auto& x : g.e)
            if (!x.is_zero()) {
                s = GaussianRational(1) / x;
                break;
            }
        for (auto& x : g.e) x = s * x;
    }
    return g;
}

bool cyclic_ray_invariant(const GaussianRational& q1, const GaussianRational& q2) {
    return q1.norm_sq() == q2.norm_sq();
}

}  // namespace sl3cv
