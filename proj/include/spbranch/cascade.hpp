#pragma once

#include <utility>
#include <vector>

#include "spbranch/tableau.hpp"

namespace spbranch {

// An ordered list of cells carrying the fillings 1..m inside a host tableau.
struct CascadeSequence {
    std::vector<Cell> cells; // cells[k-1] holds the unbarred letter k
    int length() const { return static_cast<int>(cells.size()); }
    bool operator==(const CascadeSequence&) const = default;
};

struct ConditionTriple {
    bool one;   // (I)   the 1-cell is the leftmost filled cell of its row
    bool two;   // (II)  no i strictly between the i-cell and the (i+1)-cell
    bool three; // (III) the m-cell holds the last m of the reading
    bool all() const { return one && two && three; }
};

// Throws if `s` is not a valid sequence in `t` (cells distinct, in shape,
// filled with the unbarred letters 1..m).
ConditionTriple check_conditions(const Tableau& t, const CascadeSequence& s);

// Deletes the 1-cell (leaving a hole) and decrements the fillings of the
// remaining sequence cells. No side conditions are enforced here.
Tableau cascade(const Tableau& t, const CascadeSequence& s);

// The sequence ending at the final letter m of the reading, extended
// backwards by the last k before the (k+1)-cell for k = m-1..1. Satisfies
// (I)-(III) for Littlewood-Richardson inputs. Throws if the chain cannot be
// completed (not Littlewood-Richardson) or if m = 1.
CascadeSequence find_last_sequence(const Tableau& t);

// One step of either deletion map, with enough bookkeeping to invert it and
// to replay a whole chain.
struct StepRecord {
    enum class Kind { IotaLr, IotaSp };
    Kind kind = Kind::IotaLr;

    Partition lambda_before, mu_before; // shape/weight of the host
    Partition lambda_after, mu_after;

    // iota_lr fields
    CascadeSequence seq;
    std::vector<int> seq_positions; // 1-based positions in the host reading
    int row_of_one = 0;
    int deleted_row = 0; // row of the m-cell

    // iota_sp fields
    Letter deleted = Letter::unbarred(1);
    Cell deleted_at{};

    std::string to_line() const;
};

struct IotaSpResult {
    Tableau out;
    StepRecord record;
};

// Deletes the final barred letter of the reading (the bottom cell of the
// leftmost barred column) and closes the row gap, shrinking the outer shape
// by one cell in that row. Defined on proper, non-skew, semistandard
// sp-highest tableaux with at least one barred entry.
IotaSpResult iota_sp(const Tableau& t, bool validate = true);

// Re-inserts a barred letter into the row where `target_outer` exceeds the
// current shape. Fails (DomainError) unless the result is semistandard,
// sp-highest, and maps back to `t` under iota_sp.
Tableau iota_sp_inverse(const Tableau& t, const Partition& target_outer, Letter inserted,
                        bool validate = true);

struct IotaLrResult {
    Tableau out;
    StepRecord record;
};

// Cascades the last sequence, deletes the final letter of the cascaded
// reading and closes the bottom-row gap. The outer shape loses the cell of
// the deleted letter; the inner shape absorbs the hole left by the 1-cell.
IotaLrResult iota_lr(const Tableau& t, bool validate = true);

// Inverse step: un-slides the affected row, restores the 1 and m cells,
// recovers the cascaded sequence greedily forward from the re-exposed 1-cell
// and increments it back. Fails (DomainError) unless applying iota_lr to the
// result returns `t`.
Tableau iota_lr_inverse(const Tableau& t, const SkewShape& target, bool validate = true);

} // namespace spbranch
