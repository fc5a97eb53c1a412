#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spbranch/bijection.hpp"
#include "spbranch/crystal.hpp"

namespace spbranch {

// A branching multiplicity question: how often the rank-n symplectic
// irreducible of highest weight mu occurs in the general-linear irreducible
// of highest weight lambda. n = UnboundedRank asks the stable question.
struct BranchingQuery {
    Partition lambda;
    Partition mu;
    int n = UnboundedRank;

    void validate() const; // throws DomainError on rank violations
};

// Shared enumeration path for counting and witness generation: sp-highest
// semistandard tableaux of shape lambda over A_rank (over A_{l(lambda)} when
// unbounded), optionally restricted to sp-weight mu.
void for_each_highest_weight(const Partition& lambda, int rank, const std::optional<Partition>& mu,
                             const std::function<bool(const Tableau&)>& sink);

// The same set with the enumeration letter bound widened by `extra`; the
// count must not change (the bound l(lambda) is exact). Test hook.
void for_each_highest_weight_widened(const Partition& lambda, int extra,
                                     const std::optional<Partition>& mu,
                                     const std::function<bool(const Tableau&)>& sink);

// Number of sp-highest semistandard tableaux of shape lambda and weight mu
// over A_n.
long long count_crystal(const BranchingQuery& q);

// Sum over weights nu with even conjugate of the n-symplectic
// Littlewood-Richardson tableaux of shape lambda\mu and weight nu.
long long count_sundaram(const BranchingQuery& q); // requires finite n

// Same sum without the symplectic condition (the large-rank count).
long long count_stable(const Partition& lambda, const Partition& mu);

// mu -> count_crystal(lambda, mu, n) over all mu with a nonzero count.
std::map<Partition, long long> decompose(const Partition& lambda, int n);

struct Witnesses {
    std::vector<Tableau> hw;
    std::vector<Tableau> lr;
    std::vector<std::pair<int, int>> pairs; // (lr index, hw index) matched by the bijection
};

Witnesses witnesses(const BranchingQuery& q);

struct BranchingReport {
    Partition lambda;
    Partition mu;
    int n = UnboundedRank;
    std::optional<long long> crystal, sundaram, stable, character;

    // All computed finite-rank methods agree (stable is excluded: it counts
    // the large-rank limit).
    bool consistent() const;
    std::string to_json() const;
    std::string to_text() const;
};

} // namespace spbranch
