#include "spbranch/tableau.hpp"

#include <algorithm>
#include <numeric>

namespace spbranch {

Tableau::Tableau(SkewShape shape) : shape_(std::move(shape)) {
    rows_.resize(shape_.rows());
    for (int r = 1; r <= shape_.rows(); ++r)
        rows_[r - 1].resize(shape_.row_end(r) - shape_.row_begin(r) + 1);
}

Tableau Tableau::from_rows(SkewShape shape, const std::vector<std::vector<int>>& rows) {
    Tableau t(std::move(shape));
    if (static_cast<int>(rows.size()) != t.shape_.rows())
        throw DomainError("from_rows: wrong number of rows");
    for (int r = 1; r <= t.shape_.rows(); ++r) {
        const auto& src = rows[r - 1];
        int width = t.shape_.row_end(r) - t.shape_.row_begin(r) + 1;
        if (static_cast<int>(src.size()) != width)
            throw DomainError("from_rows: row " + std::to_string(r) + " has wrong length");
        for (int k = 0; k < width; ++k)
            t.rows_[r - 1][k] = Letter::from_code(src[k]);
    }
    return t;
}

const std::optional<Letter>& Tableau::at(int r, int c) const {
    if (!shape_.has_cell(r, c))
        throw DomainError("tableau access outside shape");
    return rows_[r - 1][c - shape_.row_begin(r)];
}

void Tableau::set(int r, int c, Letter a) {
    if (!shape_.has_cell(r, c))
        throw DomainError("tableau write outside shape");
    rows_[r - 1][c - shape_.row_begin(r)] = a;
}

void Tableau::clear_cell(int r, int c) {
    if (!shape_.has_cell(r, c))
        throw DomainError("tableau write outside shape");
    rows_[r - 1][c - shape_.row_begin(r)].reset();
}

bool Tableau::is_proper() const {
    for (const auto& row : rows_)
        for (const auto& cell : row)
            if (!cell)
                return false;
    return true;
}

std::vector<Cell> Tableau::cells_in_reading_order() const {
    std::vector<Cell> cells;
    cells.reserve(num_cells());
    int max_col = shape_.outer().part(1);
    for (int c = max_col; c >= 1; --c)
        for (int r = 1; r <= shape_.rows(); ++r)
            if (shape_.has_cell(r, c))
                cells.push_back({r, c});
    return cells;
}

Word Tableau::reading() const {
    Word w;
    w.reserve(num_cells());
    for (const Cell& cell : cells_in_reading_order())
        if (const auto& a = at(cell.row, cell.col))
            w.push_back(*a);
    return w;
}

std::vector<std::pair<Cell, Letter>> Tableau::reading_with_cells() const {
    std::vector<std::pair<Cell, Letter>> out;
    out.reserve(num_cells());
    for (const Cell& cell : cells_in_reading_order())
        if (const auto& a = at(cell.row, cell.col))
            out.emplace_back(cell, *a);
    return out;
}

std::vector<std::vector<int>> Tableau::row_codes() const {
    std::vector<std::vector<int>> out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out[r].reserve(rows_[r].size());
        for (const auto& cell : rows_[r])
            out[r].push_back(cell ? cell->code() : 0);
    }
    return out;
}

bool is_semistandard(const Tableau& t) {
    const SkewShape& sh = t.shape();
    for (int r = 1; r <= sh.rows(); ++r) {
        for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
            const auto& here = t.at(r, c);
            if (!here)
                continue;
            if (sh.has_cell(r, c + 1)) {
                const auto& right = t.at(r, c + 1);
                if (right && *here > *right)
                    return false;
            }
            if (sh.has_cell(r + 1, c)) {
                const auto& below = t.at(r + 1, c);
                if (below && !(*here < *below))
                    return false;
            }
        }
    }
    return true;
}

GlWeight::GlWeight(std::map<Letter, int> counts) : counts_(std::move(counts)) {
    for (auto it = counts_.begin(); it != counts_.end();) {
        if (it->second < 0)
            throw DomainError("gl weight counts must be nonnegative");
        it = it->second == 0 ? counts_.erase(it) : std::next(it);
    }
}

int GlWeight::count(Letter a) const {
    auto it = counts_.find(a);
    return it == counts_.end() ? 0 : it->second;
}

int GlWeight::total() const {
    int n = 0;
    for (const auto& [a, c] : counts_)
        n += c;
    return n;
}

Partition GlWeight::to_partition() const {
    int max_val = 0;
    for (const auto& [a, c] : counts_) {
        if (a.is_barred())
            throw DomainError("gl weight with barred letters is not a partition");
        max_val = std::max(max_val, a.value());
    }
    std::vector<int> parts;
    for (int k = 1; k <= max_val; ++k)
        parts.push_back(count(Letter::unbarred(k)));
    return Partition(std::move(parts)); // throws unless weakly decreasing
}

SpWeight::SpWeight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

bool SpWeight::is_partition() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] < 0)
            return false;
        if (i > 0 && coeffs_[i] > coeffs_[i - 1])
            return false;
    }
    return true;
}

Partition SpWeight::to_partition() const {
    if (!is_partition())
        throw DomainError("sp weight is not dominant");
    return Partition(coeffs_);
}

GlWeight gl_weight(const Tableau& t) {
    std::map<Letter, int> counts;
    for (Letter a : t.reading())
        ++counts[a];
    return GlWeight(std::move(counts));
}

SpWeight sp_weight(const Word& w) {
    std::vector<int> coeffs;
    for (Letter a : w) {
        if (a.value() > static_cast<int>(coeffs.size()))
            coeffs.resize(a.value(), 0);
        coeffs[a.value() - 1] += a.is_barred() ? -1 : 1;
    }
    return SpWeight(std::move(coeffs));
}

SpWeight sp_weight(const Tableau& t) { return sp_weight(t.reading()); }

bool is_lattice_word(const Word& w) {
    std::vector<int> counts;
    for (Letter a : w) {
        if (a.is_barred())
            throw DomainError("lattice condition applies to unbarred words only");
        int v = a.value();
        if (v > static_cast<int>(counts.size()))
            counts.resize(v, 0);
        ++counts[v - 1];
        if (v > 1 && counts[v - 1] > counts[v - 2])
            return false;
    }
    return true;
}

bool is_littlewood_richardson(const Tableau& t) {
    if (!t.is_proper())
        throw DomainError("Littlewood-Richardson check requires a proper tableau");
    for (Letter a : t.reading())
        if (a.is_barred())
            throw DomainError("Littlewood-Richardson check requires unbarred letters");
    return is_semistandard(t) && is_lattice_word(t.reading());
}

Tableau tableau_from_reading(const SkewShape& shape, const Word& w) {
    Tableau t(shape);
    auto cells = t.cells_in_reading_order();
    if (cells.size() != w.size())
        throw DomainError("reading length does not match shape");
    for (std::size_t k = 0; k < cells.size(); ++k)
        t.set(cells[k].row, cells[k].col, w[k]);
    return t;
}

} // namespace spbranch
