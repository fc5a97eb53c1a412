#pragma once

#include <vector>

#include "spbranch/cascade.hpp"

namespace spbranch {

// A matched pair of branching witnesses: a skew Littlewood-Richardson
// tableau whose conjugate weight has even parts, the sp-highest tableau it
// corresponds to, and the chain of deletion steps connecting them.
struct BranchPair {
    Tableau lr;
    Tableau hw;
    std::vector<StepRecord> trace;
};

// The correspondence between Littlewood-Richardson tableaux of shape
// lambda\mu with conjugate-even weight and sp-highest semistandard tableaux
// of shape lambda and weight mu. Implemented iteratively: strip with iota_lr
// down to the empty tableau, start from the canonical tableau, and unwind
// with iota_sp insertions; the letter inserted at each unwind step is
// row_of_one of the matching iota_lr step, barred.
Tableau map_forward(const Tableau& lr, bool validate = true);
Tableau map_inverse(const Tableau& hw, bool validate = true);

BranchPair map_forward_traced(const Tableau& lr, bool validate = true);
BranchPair map_inverse_traced(const Tableau& hw, bool validate = true);

// Y(n+i, j) >= 2i for all i, j; unbarred tableaux only.
bool is_n_symplectic(const Tableau& t, int n);

// Whether some iterate iota_lr^k (k >= 0) carries a 1 strictly below row n.
bool has_deep_one(const Tableau& lr, int n);

// Every letter value at most n.
bool fillings_within(const Tableau& t, int n);

} // namespace spbranch
