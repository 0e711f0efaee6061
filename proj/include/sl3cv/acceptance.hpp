#pragma once

#include <string>
#include <vector>

namespace sl3cv {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

// Full verification battery: exact surface identities, table reproduction,
// uniformization and symmetric-square characters, inverse round-trips, both
// integral families, the Higgs reality sweep, the PDE oracles, and the
// Monge-Ampere identity. Each entry is independent; tolerances are fixed.
std::vector<CriterionResult> run_acceptance();

}  // namespace sl3cv
