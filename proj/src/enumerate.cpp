#include "spbranch/enumerate.hpp"

#include <algorithm>
#include <cstdlib>

namespace spbranch {

namespace {

// Backtracking state shared across the cell-by-cell search. Letters are
// placed in far-eastern reading order, so the column neighbor above and the
// row neighbor to the right are already fixed when a cell is reached.
class Search {
  public:
    Search(const SkewShape& shape, const std::vector<Letter>& alphabet, const SsytFilter& filter,
           const std::function<bool(const Tableau&)>& sink)
        : shape_(shape), alphabet_(alphabet), filter_(filter), sink_(sink), tableau_(shape) {
        cells_ = tableau_.cells_in_reading_order();
        total_ = static_cast<int>(cells_.size());

        above_.assign(total_, -1);
        right_.assign(total_, -1);
        std::map<std::pair<int, int>, int> index;
        for (int k = 0; k < total_; ++k)
            index[{cells_[k].row, cells_[k].col}] = k;
        for (int k = 0; k < total_; ++k) {
            if (auto it = index.find({cells_[k].row - 1, cells_[k].col}); it != index.end())
                above_[k] = it->second;
            if (auto it = index.find({cells_[k].row, cells_[k].col + 1}); it != index.end())
                right_[k] = it->second;
        }

        int max_value = 0;
        for (Letter a : alphabet_)
            max_value = std::max(max_value, a.value());
        plus_.assign(max_value + 2, 0);
        minus_.assign(max_value + 2, 0);
        lattice_counts_.assign(max_value + 2, 0);
        gl_counts_.assign(max_value + 2, 0);
        signed_counts_.assign(max_value + 2, 0);

        feasible_ = true;
        if (filter_.sp_target) {
            for (int i = 1; i <= filter_.sp_target->length(); ++i) {
                if (filter_.sp_target->coeff(i) != 0 && i > max_value)
                    feasible_ = false;
                sp_distance_ += std::abs(filter_.sp_target->coeff(i));
            }
            if ((sp_distance_ - total_) % 2 != 0)
                feasible_ = false;
        }
        if (filter_.gl_target) {
            if (filter_.gl_target->size() != total_ || filter_.gl_target->length() > max_value)
                feasible_ = false;
        }
        chosen_.assign(total_, Letter::unbarred(1));
    }

    void run() {
        if (feasible_)
            descend(0);
    }

  private:
    bool push_letter(Letter a, int remaining_after) {
        int v = a.value();
        if (filter_.require_sp_highest) {
            // Each letter bumps one "minus" counter; the prefix inequality
            // can only break at that index.
            if (a.is_barred()) {
                if (plus_[v] < minus_[v] + 1)
                    return false;
            } else if (v >= 2) {
                if (plus_[v - 1] < minus_[v - 1] + 1)
                    return false;
            }
        }
        if (filter_.require_lattice) {
            if (a.is_barred())
                throw DomainError("lattice filter requires unbarred alphabet");
            if (v >= 2 && lattice_counts_[v] + 1 > lattice_counts_[v - 1])
                return false;
        }
        if (filter_.gl_target) {
            if (a.is_barred())
                return false;
            if (gl_counts_[v] + 1 > filter_.gl_target->part(v))
                return false;
        }
        if (filter_.sp_target) {
            int target = filter_.sp_target->coeff(v);
            int before = std::abs(target - signed_counts_[v]);
            int after = std::abs(target - (signed_counts_[v] + (a.is_barred() ? -1 : 1)));
            if (sp_distance_ + (after - before) > remaining_after)
                return false;
            sp_distance_ += after - before;
        }
        if (a.is_barred()) {
            ++minus_[v];
            if (v >= 2)
                ++plus_[v - 1];
            --signed_counts_[v];
        } else {
            ++plus_[v];
            if (v >= 2)
                ++minus_[v - 1];
            ++signed_counts_[v];
            ++lattice_counts_[v];
            ++gl_counts_[v];
        }
        return true;
    }

    void pop_letter(Letter a) {
        int v = a.value();
        if (a.is_barred()) {
            --minus_[v];
            if (v >= 2)
                --plus_[v - 1];
            ++signed_counts_[v];
        } else {
            --plus_[v];
            if (v >= 2)
                --minus_[v - 1];
            --signed_counts_[v];
            --lattice_counts_[v];
            --gl_counts_[v];
        }
        if (filter_.sp_target) {
            int target = filter_.sp_target->coeff(v);
            int with = std::abs(target - (signed_counts_[v] + (a.is_barred() ? -1 : 1)));
            int without = std::abs(target - signed_counts_[v]);
            sp_distance_ += without - with;
        }
    }

    bool descend(int k) {
        if (k == total_)
            return sink_(tableau_);
        for (Letter a : alphabet_) {
            if (above_[k] >= 0 && !(chosen_[above_[k]] < a))
                continue;
            if (right_[k] >= 0 && a > chosen_[right_[k]])
                continue;
            if (!push_letter(a, total_ - k - 1))
                continue;
            chosen_[k] = a;
            tableau_.set(cells_[k].row, cells_[k].col, a);
            bool keep_going = descend(k + 1);
            tableau_.clear_cell(cells_[k].row, cells_[k].col);
            pop_letter(a);
            if (!keep_going)
                return false;
        }
        return true;
    }

    const SkewShape& shape_;
    const std::vector<Letter>& alphabet_;
    const SsytFilter& filter_;
    const std::function<bool(const Tableau&)>& sink_;

    Tableau tableau_;
    std::vector<Cell> cells_;
    std::vector<Letter> chosen_;
    std::vector<int> above_, right_;
    int total_ = 0;
    bool feasible_ = true;

    std::vector<int> plus_, minus_;     // highest-weight prefix counters
    std::vector<int> lattice_counts_;   // unbarred occurrences for lattice rule
    std::vector<int> gl_counts_;        // unbarred occurrences for gl target
    std::vector<int> signed_counts_;    // per-value signed counts for sp target
    int sp_distance_ = 0;               // L1 distance to sp target
};

} // namespace

void for_each_ssyt(const SkewShape& shape, const std::vector<Letter>& alphabet,
                   const SsytFilter& filter, const std::function<bool(const Tableau&)>& sink) {
    std::vector<Letter> sorted = alphabet;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Search(shape, sorted, filter, sink).run();
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, const std::vector<Letter>& alphabet,
                                    const SsytFilter& filter) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, alphabet, filter, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

void for_each_lr(const SkewShape& shape, const Partition& weight,
                 const std::function<bool(const Tableau&)>& sink) {
    if (shape.num_cells() != weight.size())
        throw DomainError("enumerate_lr: |shape| must equal |weight|");
    SsytFilter filter;
    filter.gl_target = weight;
    filter.require_lattice = true;
    for_each_ssyt(shape, alphabet_unbarred(weight.length()), filter, sink);
}

std::vector<Tableau> enumerate_lr(const SkewShape& shape, const Partition& weight) {
    std::vector<Tableau> out;
    for_each_lr(shape, weight, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

} // namespace spbranch
