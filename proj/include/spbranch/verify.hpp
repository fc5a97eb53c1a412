#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spbranch/branching.hpp"
#include "spbranch/oracle.hpp"

namespace spbranch {

struct VerifyBounds {
    int max_cells = 8;
    int max_rows = 5;
    std::vector<int> ranks = {2, 3};
    // The character oracle and the operator-level crystal checks sweep a
    // smaller window.
    int oracle_max_cells = 6;
    int oracle_max_rows = 4;
    int crystal_max_cells = 6;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    long long checked = 0;  // instances examined
    std::string detail;     // first counterexample, empty when passing
};

// Shapes swept: lambda with |lambda| <= max_cells and l(lambda) <= max_rows,
// mu running over sub-partitions of lambda.
CheckResult verify_main_theorem(const VerifyBounds& bounds);
CheckResult verify_stability(const VerifyBounds& bounds);

// Forward map hook so the harness itself can be tested against an injected
// fault; the default is the real bijection.
CheckResult verify_bijection(const VerifyBounds& bounds,
                             const std::function<Tableau(const Tableau&)>& forward = {});

CheckResult verify_lemma_symplectic(const VerifyBounds& bounds); // fillings / n-symplectic / deep 1
CheckResult verify_lemma_highest_prefix(const VerifyBounds& bounds); // prefix rule vs raising ops
CheckResult verify_lemma_structure(const VerifyBounds& bounds);      // row screen on highest tableaux
CheckResult verify_cascade_orders(const VerifyBounds& bounds);       // sequence order laws
CheckResult verify_oracle(const VerifyBounds& bounds);

std::vector<CheckResult> verify_all(const VerifyBounds& bounds);

} // namespace spbranch
