#include "spbranch/cascade.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spbranch/crystal.hpp"

namespace spbranch {

namespace {

void validate_sequence(const Tableau& t, const CascadeSequence& s) {
    if (s.cells.empty())
        throw DomainError("cascade sequence must be nonempty");
    std::set<Cell> seen;
    for (int k = 1; k <= s.length(); ++k) {
        const Cell& cell = s.cells[k - 1];
        if (!t.shape().has_cell(cell.row, cell.col))
            throw DomainError("cascade sequence cell outside the shape");
        if (!seen.insert(cell).second)
            throw DomainError("cascade sequence cells must be distinct");
        const auto& a = t.at(cell.row, cell.col);
        if (!a || a->is_barred() || a->value() != k)
            throw DomainError("cascade sequence cell " + std::to_string(k) +
                              " does not carry the filling " + std::to_string(k));
    }
}

int reading_position(const std::vector<std::pair<Cell, Letter>>& rc, const Cell& cell) {
    for (int j = 0; j < static_cast<int>(rc.size()); ++j)
        if (rc[j].first == cell)
            return j;
    throw InternalCheckError("cell not present in reading");
}

} // namespace

ConditionTriple check_conditions(const Tableau& t, const CascadeSequence& s) {
    validate_sequence(t, s);
    auto rc = t.reading_with_cells();
    int m = s.length();

    std::vector<int> pos(m);
    for (int k = 0; k < m; ++k)
        pos[k] = reading_position(rc, s.cells[k]);

    ConditionTriple cond{true, true, true};

    const Cell& one = s.cells[0];
    for (int c = t.shape().row_begin(one.row); c < one.col; ++c)
        if (t.at(one.row, c))
            cond.one = false;

    for (int k = 1; k < m && cond.two; ++k)
        for (int j = pos[k - 1] + 1; j < pos[k]; ++j)
            if (rc[j].second == Letter::unbarred(k))
                cond.two = false;

    for (int j = pos[m - 1] + 1; j < static_cast<int>(rc.size()); ++j)
        if (rc[j].second == Letter::unbarred(m))
            cond.three = false;

    return cond;
}

Tableau cascade(const Tableau& t, const CascadeSequence& s) {
    validate_sequence(t, s);
    Tableau out = t;
    out.clear_cell(s.cells[0].row, s.cells[0].col);
    for (int k = 2; k <= s.length(); ++k)
        out.set(s.cells[k - 1].row, s.cells[k - 1].col, Letter::unbarred(k - 1));
    return out;
}

CascadeSequence find_last_sequence(const Tableau& t) {
    if (!t.is_proper())
        throw DomainError("find_last_sequence requires a proper tableau");
    if (t.empty())
        throw DomainError("find_last_sequence requires a nonempty tableau");
    auto rc = t.reading_with_cells();
    for (const auto& [cell, a] : rc)
        if (a.is_barred())
            throw DomainError("find_last_sequence requires unbarred fillings");

    Letter last = rc.back().second;
    int m = last.value();
    if (m == 1)
        throw DomainError("last sequence has a single filling; weight is malformed");

    CascadeSequence s;
    s.cells.assign(m, Cell{});
    s.cells[m - 1] = rc.back().first;
    int pos = static_cast<int>(rc.size()) - 1;
    for (int k = m - 1; k >= 1; --k) {
        int found = -1;
        for (int j = pos - 1; j >= 0; --j) {
            if (rc[j].second == Letter::unbarred(k)) {
                found = j;
                break;
            }
        }
        if (found < 0)
            throw DomainError("no " + std::to_string(k) + " before the " + std::to_string(k + 1) +
                              "-cell; tableau is not Littlewood-Richardson");
        s.cells[k - 1] = rc[found].first;
        pos = found;
    }
    return s;
}

std::string StepRecord::to_line() const {
    std::ostringstream out;
    if (kind == Kind::IotaLr) {
        out << "iota_lr: s=[";
        for (int k = 0; k < seq.length(); ++k) {
            if (k)
                out << ',';
            out << '(' << seq.cells[k].row << ',' << seq.cells[k].col << ')';
        }
        out << "] m=" << seq.length() << " row_of_one=" << row_of_one;
    } else {
        out << "iota_sp: deleted=" << deleted.to_string() << " at (" << deleted_at.row << ','
            << deleted_at.col << ')';
    }
    return out.str();
}

IotaSpResult iota_sp(const Tableau& t, bool validate) {
    if (!t.is_proper())
        throw DomainError("iota_sp requires a proper tableau");
    if (!t.shape().inner().empty())
        throw DomainError("iota_sp requires a non-skew tableau");
    if (!is_semistandard(t))
        throw DomainError("iota_sp requires a semistandard tableau");
    if (validate && !is_sp_highest(t.reading()))
        throw DomainError("iota_sp requires an sp-highest tableau");

    auto rc = t.reading_with_cells();
    int last_barred = -1;
    for (int j = static_cast<int>(rc.size()) - 1; j >= 0; --j) {
        if (rc[j].second.is_barred()) {
            last_barred = j;
            break;
        }
    }
    if (last_barred < 0)
        throw DomainError("iota_sp: no entry with negative weight");

    const Cell at = rc[last_barred].first;
    const Letter deleted = rc[last_barred].second;
    const Partition& lambda = t.shape().outer();

    // Deleting the bottom cell of the leftmost barred column always leaves a
    // partition shape: the row below never reaches this column.
    if (lambda.part(at.row) - 1 < lambda.part(at.row + 1))
        throw MalformedHighestWeight("deleting the last negative entry breaks the shape");

    Partition out_shape = lambda.with_part_delta(at.row, -1);
    Tableau out{SkewShape(out_shape, Partition())};
    for (int r = 1; r <= out_shape.length(); ++r) {
        for (int c = 1; c <= out_shape.part(r); ++c) {
            int src_col = (r == at.row && c >= at.col) ? c + 1 : c;
            out.set(r, c, *t.at(r, src_col));
        }
    }

    if (!is_semistandard(out))
        throw MalformedHighestWeight("iota_sp image is not semistandard");
    if (validate && !is_sp_highest(out.reading()))
        throw MalformedHighestWeight("iota_sp image is not sp-highest");

    StepRecord rec;
    rec.kind = StepRecord::Kind::IotaSp;
    rec.lambda_before = lambda;
    rec.mu_before = sp_weight(t).to_partition();
    rec.lambda_after = out_shape;
    rec.mu_after = sp_weight(out).to_partition();
    rec.deleted = deleted;
    rec.deleted_at = at;
    return {std::move(out), std::move(rec)};
}

Tableau iota_sp_inverse(const Tableau& t, const Partition& target_outer, Letter inserted,
                        bool validate) {
    if (!inserted.is_barred())
        throw DomainError("iota_sp_inverse inserts a barred letter");
    if (!t.is_proper() || !t.shape().inner().empty())
        throw DomainError("iota_sp_inverse requires a proper non-skew tableau");

    const Partition& cur = t.shape().outer();
    int grow_row = 0;
    for (int r = 1; r <= std::max(cur.length(), target_outer.length()); ++r) {
        int d = target_outer.part(r) - cur.part(r);
        if (d == 0)
            continue;
        if (d != 1 || grow_row != 0)
            throw DomainError("target shape must exceed the current one by a single cell");
        grow_row = r;
    }
    if (grow_row == 0)
        throw DomainError("target shape equals the current one");

    Tableau out{SkewShape(target_outer, Partition())};
    for (int r = 1; r <= target_outer.length(); ++r) {
        if (r != grow_row) {
            for (int c = 1; c <= target_outer.part(r); ++c)
                out.set(r, c, *t.at(r, c));
            continue;
        }
        std::vector<Letter> row;
        for (int c = 1; c <= cur.part(r); ++c)
            row.push_back(*t.at(r, c));
        row.insert(std::upper_bound(row.begin(), row.end(), inserted), inserted);
        for (int c = 1; c <= target_outer.part(r); ++c)
            out.set(r, c, row[c - 1]);
    }

    if (!is_semistandard(out))
        throw DomainError("iota_sp_inverse: insertion is not semistandard");
    auto rc = out.reading_with_cells();
    int last_barred = -1;
    for (int j = static_cast<int>(rc.size()) - 1; j >= 0; --j) {
        if (rc[j].second.is_barred()) {
            last_barred = j;
            break;
        }
    }
    if (last_barred < 0 || rc[last_barred].first.row != grow_row ||
        rc[last_barred].second != inserted)
        throw DomainError("iota_sp_inverse: inserted entry is not the last negative one");
    if (validate) {
        if (!is_sp_highest(out.reading()))
            throw DomainError("iota_sp_inverse: result is not sp-highest");
        if (iota_sp(out, false).out != t)
            throw InternalCheckError("iota_sp_inverse does not invert iota_sp");
    }
    return out;
}

IotaLrResult iota_lr(const Tableau& t, bool validate) {
    if (!t.is_proper())
        throw DomainError("iota_lr requires a proper tableau");
    if (t.empty())
        throw DomainError("iota_lr requires a nonempty tableau");
    if (validate && !is_littlewood_richardson(t))
        throw DomainError("iota_lr requires a Littlewood-Richardson tableau");

    CascadeSequence s = find_last_sequence(t);
    ConditionTriple cond = check_conditions(t, s);
    if (!cond.all())
        throw DomainError("last sequence violates the cascade side conditions");

    auto rc = t.reading_with_cells();
    std::vector<int> positions(s.length());
    for (int k = 0; k < s.length(); ++k)
        positions[k] = reading_position(rc, s.cells[k]) + 1;

    const int m = s.length();
    const Partition& lambda = t.shape().outer();
    const Partition& mu = t.shape().inner();
    const int row_one = s.cells[0].row;

    Tableau cascaded = cascade(t, s);
    auto rc2 = cascaded.reading_with_cells();
    const Cell m_cell = s.cells[m - 1];
    if (rc2.back().first != m_cell)
        throw InternalCheckError("cascaded m-cell is not the last letter of the reading");
    if (m_cell.col != mu.part(m_cell.row) + 1)
        throw InternalCheckError("cascaded m-cell is not the leftmost cell of its row");
    if (s.cells[0].col != mu.part(row_one) + 1)
        throw InternalCheckError("1-cell is not the leftmost cell of its row");

    Partition out_outer = lambda.with_part_delta(m_cell.row, -1);
    Partition out_inner = mu.with_part_delta(row_one, +1);
    Tableau out{SkewShape(out_outer, out_inner)};
    const SkewShape& osh = out.shape();
    for (int r = 1; r <= osh.rows(); ++r) {
        for (int c = osh.row_begin(r); c <= osh.row_end(r); ++c) {
            int src_col = (r == m_cell.row) ? c + 1 : c;
            out.set(r, c, *cascaded.at(r, src_col));
        }
    }

    if (validate) {
        if (!is_littlewood_richardson(out))
            throw InternalCheckError("iota_lr image is not Littlewood-Richardson");
        GlWeight before = gl_weight(t);
        std::map<Letter, int> expect = before.counts();
        if (--expect[Letter::unbarred(m)] == 0)
            expect.erase(Letter::unbarred(m));
        if (--expect[Letter::unbarred(m - 1)] == 0)
            expect.erase(Letter::unbarred(m - 1));
        if (gl_weight(out) != GlWeight(expect))
            throw InternalCheckError("iota_lr weight change is not -e_m - e_{m-1}");
    }

    StepRecord rec;
    rec.kind = StepRecord::Kind::IotaLr;
    rec.lambda_before = lambda;
    rec.mu_before = mu;
    rec.lambda_after = out_outer;
    rec.mu_after = out_inner;
    rec.seq = std::move(s);
    rec.seq_positions = std::move(positions);
    rec.row_of_one = row_one;
    rec.deleted_row = m_cell.row;
    return {std::move(out), std::move(rec)};
}

Tableau iota_lr_inverse(const Tableau& t, const SkewShape& target, bool validate) {
    if (!t.is_proper())
        throw DomainError("iota_lr_inverse requires a proper tableau");
    const Partition& lambda = target.outer();
    const Partition& mu = target.inner();
    const Partition& cur_outer = t.shape().outer();
    const Partition& cur_inner = t.shape().inner();

    int del_row = 0, one_row = 0;
    for (int r = 1; r <= std::max(lambda.length(), cur_outer.length()); ++r) {
        int d = lambda.part(r) - cur_outer.part(r);
        if (d == 0)
            continue;
        if (d != 1 || del_row != 0)
            throw DomainError("outer shapes must differ by a single cell");
        del_row = r;
    }
    for (int r = 1; r <= std::max(mu.length(), cur_inner.length()); ++r) {
        int d = cur_inner.part(r) - mu.part(r);
        if (d == 0)
            continue;
        if (d != 1 || one_row != 0)
            throw DomainError("inner shapes must differ by a single cell");
        one_row = r;
    }
    if (del_row == 0 || one_row == 0 || del_row == one_row)
        throw DomainError("shape difference not of the iota_lr form");

    const Cell one_cell{one_row, mu.part(one_row) + 1};
    const Cell m_cell{del_row, mu.part(del_row) + 1};

    Tableau w{target};
    for (int r = 1; r <= target.rows(); ++r) {
        for (int c = target.row_begin(r); c <= target.row_end(r); ++c) {
            if (r == del_row) {
                if (c > m_cell.col)
                    w.set(r, c, *t.at(r, c - 1)); // un-slide one column right
            } else if (r == one_row && c == one_cell.col) {
                w.set(r, c, Letter::unbarred(1));
            } else {
                w.set(r, c, *t.at(r, c));
            }
        }
    }

    // Recover the cascaded sequence: first k after the previous cell, scanning
    // strictly between the re-added 1-cell and the m-cell.
    auto cells = w.cells_in_reading_order();
    int idx_one = -1, idx_m = -1;
    for (int j = 0; j < static_cast<int>(cells.size()); ++j) {
        if (cells[j] == one_cell)
            idx_one = j;
        if (cells[j] == m_cell)
            idx_m = j;
    }
    if (idx_one < 0 || idx_m < 0 || idx_one >= idx_m)
        throw DomainError("re-added cells are out of reading order");

    std::vector<Cell> chain;
    int k = 1;
    int cursor = idx_one;
    while (true) {
        int found = -1;
        for (int j = cursor + 1; j < idx_m; ++j) {
            const auto& a = w.at(cells[j].row, cells[j].col);
            if (a && *a == Letter::unbarred(k)) {
                found = j;
                break;
            }
        }
        if (found < 0)
            break;
        chain.push_back(cells[found]);
        cursor = found;
        ++k;
    }
    int m = k + 1;
    for (std::size_t j = 0; j < chain.size(); ++j)
        w.set(chain[j].row, chain[j].col, Letter::unbarred(static_cast<int>(j) + 2));
    w.set(m_cell.row, m_cell.col, Letter::unbarred(m));

    if (!is_littlewood_richardson(w))
        throw DomainError("iota_lr_inverse: reconstruction is not Littlewood-Richardson");
    if (validate && iota_lr(w, false).out != t)
        throw DomainError("iota_lr_inverse: reconstruction does not map back");
    return w;
}

} // namespace spbranch
