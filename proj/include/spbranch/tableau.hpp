#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "spbranch/letter.hpp"
#include "spbranch/partition.hpp"

namespace spbranch {

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Earlier in the far-eastern reading: larger column first, then smaller row.
inline bool reading_before(const Cell& a, const Cell& b) {
    if (a.col != b.col)
        return a.col > b.col;
    return a.row < b.row;
}

// Assignment of letters to the cells of a skew shape. A cell may be empty (a
// hole); holes only arise transiently while cascading, and every public
// operation except the cascade machinery requires a proper (hole-free)
// tableau.
class Tableau {
  public:
    Tableau() = default;
    explicit Tableau(SkewShape shape); // all cells holes

    // Rows of letter codes (negative = barred), skew cells only.
    static Tableau from_rows(SkewShape shape, const std::vector<std::vector<int>>& rows);

    const SkewShape& shape() const { return shape_; }

    const std::optional<Letter>& at(int r, int c) const;
    void set(int r, int c, Letter a);
    void clear_cell(int r, int c); // makes a hole

    bool is_proper() const; // no holes
    int num_cells() const { return shape_.num_cells(); }
    bool empty() const { return num_cells() == 0; }

    // Cells in far-eastern order (columns right to left, top to bottom),
    // including holes.
    std::vector<Cell> cells_in_reading_order() const;

    // Far-eastern reading; holes are skipped.
    Word reading() const;
    std::vector<std::pair<Cell, Letter>> reading_with_cells() const;

    // Row contents left to right (skew cells only), as letter codes.
    std::vector<std::vector<int>> row_codes() const;

    bool operator==(const Tableau&) const = default;

  private:
    SkewShape shape_;
    std::vector<std::vector<std::optional<Letter>>> rows_; // rows_[r-1] starts at row_begin(r)
};

// Weak increase along rows, strict increase down columns; comparisons against
// holes hold vacuously.
bool is_semistandard(const Tableau& t);

// Occurrence counts per letter.
class GlWeight {
  public:
    GlWeight() = default;
    explicit GlWeight(std::map<Letter, int> counts);

    int count(Letter a) const;
    const std::map<Letter, int>& counts() const { return counts_; }
    int total() const;

    // Interprets the counts of unbarred 1..k as a partition. Throws if a
    // barred letter occurs or the counts are not weakly decreasing.
    Partition to_partition() const;

    bool operator==(const GlWeight&) const = default;

  private:
    std::map<Letter, int> counts_;
};

// Signed occurrence counts: +1 per unbarred i, -1 per barred i, in
// coordinate i. Trailing zeros are normalized away.
class SpWeight {
  public:
    SpWeight() = default;
    explicit SpWeight(std::vector<int> coeffs);
    static SpWeight from_partition(const Partition& p) { return SpWeight(p.parts()); }

    int coeff(int i) const {
        return (i >= 1 && i <= static_cast<int>(coeffs_.size())) ? coeffs_[i - 1] : 0;
    }
    int length() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<int>& coeffs() const { return coeffs_; }

    bool is_partition() const;
    Partition to_partition() const; // throws unless is_partition()

    bool operator==(const SpWeight&) const = default;
    auto operator<=>(const SpWeight&) const = default;

  private:
    std::vector<int> coeffs_;
};

GlWeight gl_weight(const Tableau& t);
SpWeight sp_weight(const Word& w);
SpWeight sp_weight(const Tableau& t);

// Every prefix has at least as many i as i+1, for all i. Unbarred words only.
bool is_lattice_word(const Word& w);

// Semistandard skew tableau with a lattice far-eastern reading.
bool is_littlewood_richardson(const Tableau& t);

// Rebuilds the tableau of the given shape whose far-eastern reading is `w`.
Tableau tableau_from_reading(const SkewShape& shape, const Word& w);

} // namespace spbranch
