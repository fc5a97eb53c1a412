#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spbranch/enumerate.hpp"
#include "spbranch/tableau.hpp"

namespace spbranch {

enum class Mark { Plus, Minus, Neutral };

// Mark of a letter for crystal index i in the symplectic natural crystal
//   1 -1-> 2 -2-> ... -n-> nbar -> ... -1-> 1bar.
// Plus iff the letter is i or (i+1)bar, minus iff it is i+1 or ibar; letters
// beyond the alphabet in use simply never occur.
Mark sp_letter_mark(Letter a, int i);

// Unmatched minus / plus counts after reduction of the i-signature of `w`
// (first letter of the word = first tensor factor).
int epsilon_i(const Word& w, int i);
int phi_i(const Word& w, int i);

// Kashiwara operators on words over A_rank via the signature rule. Raising
// acts at the leftmost unmatched minus, lowering at the rightmost unmatched
// plus; absent when no unmatched mark exists.
std::optional<Word> sp_raise(const Word& w, int i, int rank);
std::optional<Word> sp_lower(const Word& w, int i, int rank);

// Type A operators on unbarred words over {1..m}, i in {1..m-1}.
std::optional<Word> gl_raise(const Word& w, int i);
std::optional<Word> gl_lower(const Word& w, int i);

// Index translation [2n] -> A_n: a <= n stays unbarred, a > n becomes
// (2n-a+1)bar.
Letter translate(int a, int n);
int translate_back(Letter a, int n); // inverse

constexpr int UnboundedRank = 0;

// Highest-weight test via the prefix inequality
//   #{a_j = i or (i+1)bar : j < k} >= #{a_j = i+1 or ibar : j <= k}.
// For a finite rank the letters must lie in A_rank; for UnboundedRank the
// check runs over every index up to the largest value present plus one
// (the two notions agree on words over A_rank).
bool is_sp_highest(const Word& w, int rank = UnboundedRank);

// Structural screen for sp-highest tableaux: the canonical sub-tableau of
// shape sp_weight(t) sits at Y(i,j)=i, unbarred entries v lie in rows <= v,
// and barred entries v lie strictly below row v. Necessary, not sufficient.
bool validate_sp_structure(const Tableau& t);

// Y(i,j) = i.
Tableau canonical_tableau(const Partition& lambda);

enum class Algebra { Gl, Sp };

struct CrystalGraph {
    std::vector<Tableau> nodes; // sorted by reading
    struct Edge {
        int source;
        int index; // crystal index i
        int target;
    };
    std::vector<Edge> edges;

    std::string to_dot() const;
    std::string to_json() const;
};

// Nodes are all semistandard tableaux of shape lambda over A_n; edges are
// given by the lowering operators (gl over [2n] readings, sp over A_n).
CrystalGraph crystal_graph(const Partition& lambda, int n, Algebra algebra);

} // namespace spbranch
