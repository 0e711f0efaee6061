#pragma once

#include <array>
#include <optional>

#include "sl3cv/gaussian.hpp"

namespace sl3cv {

enum class HiggsFamilyKind { CyclicQ, GenI, GenII, GenIII, GenIV };

// Residue-level data of a rank-3 strongly parabolic Higgs field on the sphere
// with three marked points. Construction through the named constructors
// validates the excluded parameter values.
struct HiggsFamily {
    HiggsFamilyKind kind;
    GaussianRational q;            // CyclicQ: the cubic-differential coefficient
    GaussianRational alpha, beta;  // GenI
    GaussianRational xi;           // GenII..GenIV

    static HiggsFamily cyclic(GaussianRational q);
    static HiggsFamily gen1(GaussianRational alpha, GaussianRational beta);
    static HiggsFamily gen2(GaussianRational xi);
    static HiggsFamily gen3(GaussianRational xi);
    static HiggsFamily gen4(GaussianRational xi);
};

// Residues at the first two punctures; the third is forced by the residue
// theorem, r3 = -(r1 + r2).
struct ResidueData {
    Mat3c r1, r2, r3;
};

ResidueData build_family(const HiggsFamily& f);

struct NilpotencyReport {
    bool traces_vanish;  // tr r = tr r^2 = tr r^3 = 0
    int index;           // least k with r^k = 0; 0 when not nilpotent
};

std::array<NilpotencyReport, 3> check_nilpotency(const ResidueData& d);

// Nonsingular g with g r_i = r_i^t g for all residues, when the solution
// space of the 18-equation linear system contains an invertible element;
// normalized to det g = 1 when that scaling stays in the field.
std::optional<Mat3c> real_criterion(const ResidueData& d, unsigned seed = 1);

// Isometry-class invariant of the cyclic family: |q1| = |q2|.
bool cyclic_ray_invariant(const GaussianRational& q1, const GaussianRational& q2);

}  // namespace sl3cv
