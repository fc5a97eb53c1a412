#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spbranch/tableau.hpp"

namespace spbranch {

// Leaf filters for the semistandard backtracking enumerator. Weight targets
// and the prefix conditions are pushed into the search as pruning rules.
struct SsytFilter {
    std::optional<SpWeight> sp_target;
    std::optional<Partition> gl_target;  // unbarred occurrence counts
    bool require_lattice = false;        // lattice prefixes (unbarred only)
    bool require_sp_highest = false;     // highest-weight prefix condition
};

// Visits every proper semistandard tableau of the given shape over the given
// (sorted) alphabet, in lexicographic order of the far-eastern reading.
// The sink returns false to stop the enumeration early.
void for_each_ssyt(const SkewShape& shape, const std::vector<Letter>& alphabet,
                   const SsytFilter& filter, const std::function<bool(const Tableau&)>& sink);

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, const std::vector<Letter>& alphabet,
                                    const SsytFilter& filter = {});

// Littlewood-Richardson tableaux of the given shape and weight, reading-lex
// order. Requires |shape| = |weight|.
void for_each_lr(const SkewShape& shape, const Partition& weight,
                 const std::function<bool(const Tableau&)>& sink);
std::vector<Tableau> enumerate_lr(const SkewShape& shape, const Partition& weight);

} // namespace spbranch
