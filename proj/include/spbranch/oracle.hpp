#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "spbranch/partition.hpp"

namespace spbranch {

// Length-n integer vectors in the epsilon coordinates of the rank-n
// symplectic torus, with multiplicities.
using WeightVector = std::vector<int>;
using WeightMultiset = std::map<WeightVector, long long>;

// Type C_n root data: positive roots e_i - e_j, e_i + e_j (i < j) and 2 e_i;
// rho = (n, n-1, ..., 1); the standard dot product.
struct RootSystemC {
    explicit RootSystemC(int rank);
    int rank;
    std::vector<WeightVector> positive_roots; // n^2 of them
    WeightVector rho;
};

// Sorted-absolute-value representative of the signed-permutation orbit.
WeightVector dominant_representative(const WeightVector& w);

// Full weight multiset of the irreducible rank-n symplectic representation
// of highest weight mu, by the Freudenthal recursion on the dominant cone
// followed by orbit expansion. Exact integer arithmetic throughout.
WeightMultiset freudenthal(const Partition& mu, int n);

long long sp_dim(const Partition& mu, int n);

// Multiset of signed letter counts over all semistandard tableaux of shape
// lambda on the alphabet A_n (the gl character restricted to the symplectic
// torus).
WeightMultiset restrict_gl_character(const Partition& lambda, int n);

// Branching multiplicities by iterated stripping: repeatedly pick a
// dominance-maximal dominant weight with nonzero residual multiplicity and
// subtract that many copies of its irreducible character. A negative
// residual at any point aborts. `pick` resolves ties among incomparable
// maximal weights; the default takes the lexicographically largest.
std::map<Partition, long long> strip_decompose(
    const Partition& lambda, int n,
    const std::function<std::size_t(const std::vector<WeightVector>&)>& pick = nullptr);

} // namespace spbranch
