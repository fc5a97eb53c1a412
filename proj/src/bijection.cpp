#include "spbranch/bijection.hpp"

#include <algorithm>

#include "spbranch/crystal.hpp"

namespace spbranch {

namespace {

void check_forward_domain(const Tableau& lr) {
    if (!lr.is_proper())
        throw DomainError("map_forward requires a proper tableau");
    if (!is_littlewood_richardson(lr))
        throw DomainError("not Littlewood-Richardson");
    Partition weight_conj = conjugate(gl_weight(lr).to_partition());
    for (int p : weight_conj.parts())
        if (p % 2 != 0)
            throw DomainError("weight conjugate has an odd part");
}

Cell last_barred_cell(const Tableau& t) {
    auto rc = t.reading_with_cells();
    for (int j = static_cast<int>(rc.size()) - 1; j >= 0; --j)
        if (rc[j].second.is_barred())
            return rc[j].first;
    throw InternalCheckError("no barred entry found");
}

BranchPair run_forward(const Tableau& lr, bool validate) {
    if (validate)
        check_forward_domain(lr);

    BranchPair pair;
    pair.lr = lr;

    std::vector<StepRecord> lr_steps;
    Tableau t = lr;
    while (!t.empty()) {
        IotaLrResult step = iota_lr(t, validate);
        t = std::move(step.out);
        lr_steps.push_back(std::move(step.record));
    }
    if (t.shape().outer() != t.shape().inner())
        throw InternalCheckError("chain did not end at an empty skew tableau");

    Tableau hw = canonical_tableau(t.shape().outer());
    std::vector<StepRecord> sp_steps;
    for (auto it = lr_steps.rbegin(); it != lr_steps.rend(); ++it) {
        Letter inserted = Letter::barred(it->row_of_one);
        Tableau bigger = iota_sp_inverse(hw, it->lambda_before, inserted, validate);

        StepRecord rec;
        rec.kind = StepRecord::Kind::IotaSp;
        rec.lambda_before = bigger.shape().outer();
        rec.mu_before = sp_weight(bigger).to_partition();
        rec.lambda_after = hw.shape().outer();
        rec.mu_after = sp_weight(hw).to_partition();
        rec.deleted = inserted;
        rec.deleted_at = last_barred_cell(bigger);
        sp_steps.push_back(std::move(rec));

        hw = std::move(bigger);
    }

    if (validate) {
        if (hw.shape().outer() != lr.shape().outer())
            throw InternalCheckError("image shape mismatch");
        if (sp_weight(hw) != SpWeight(lr.shape().inner().parts()))
            throw InternalCheckError("image weight mismatch");
    }

    // Keep both halves of the trace aligned by level: entry k strips the
    // same pair of cells as entry (#levels + k).
    std::reverse(sp_steps.begin(), sp_steps.end());

    pair.hw = std::move(hw);
    pair.trace = std::move(lr_steps);
    pair.trace.insert(pair.trace.end(), sp_steps.begin(), sp_steps.end());
    return pair;
}

BranchPair run_inverse(const Tableau& hw, bool validate) {
    if (!hw.is_proper() || !hw.shape().inner().empty())
        throw DomainError("map_inverse requires a proper non-skew tableau");
    if (!is_semistandard(hw))
        throw DomainError("map_inverse requires a semistandard tableau");
    if (!sp_weight(hw).is_partition())
        throw DomainError("weight is not dominant");
    if (validate && !is_sp_highest(hw.reading()))
        throw DomainError("not sp-highest");

    BranchPair pair;
    pair.hw = hw;

    std::vector<StepRecord> sp_steps;
    Tableau t = hw;
    auto has_barred = [](const Tableau& x) {
        for (Letter a : x.reading())
            if (a.is_barred())
                return true;
        return false;
    };
    while (has_barred(t)) {
        IotaSpResult step = iota_sp(t, validate);
        t = std::move(step.out);
        sp_steps.push_back(std::move(step.record));
    }
    if (t != canonical_tableau(t.shape().outer()))
        throw DomainError("barred-free stage is not the canonical tableau");

    Tableau lr{SkewShape(t.shape().outer(), t.shape().outer())};
    std::vector<StepRecord> lr_steps;
    for (auto it = sp_steps.rbegin(); it != sp_steps.rend(); ++it) {
        SkewShape target(it->lambda_before, it->mu_before);
        Tableau bigger = iota_lr_inverse(lr, target, validate);
        // Recover the step bookkeeping from the forward direction.
        IotaLrResult redo = iota_lr(bigger, false);
        if (redo.out != lr)
            throw InternalCheckError("iota_lr_inverse does not invert iota_lr");
        lr_steps.push_back(std::move(redo.record));
        lr = std::move(bigger);
    }
    std::reverse(lr_steps.begin(), lr_steps.end());

    if (validate) {
        if (lr.shape().outer() != hw.shape().outer())
            throw InternalCheckError("preimage outer shape mismatch");
        if (SpWeight(lr.shape().inner().parts()) != sp_weight(hw))
            throw InternalCheckError("preimage inner shape mismatch");
    }

    pair.lr = std::move(lr);
    pair.trace = std::move(lr_steps);
    pair.trace.insert(pair.trace.end(), sp_steps.begin(), sp_steps.end());
    return pair;
}

} // namespace

Tableau map_forward(const Tableau& lr, bool validate) { return run_forward(lr, validate).hw; }

Tableau map_inverse(const Tableau& hw, bool validate) { return run_inverse(hw, validate).lr; }

BranchPair map_forward_traced(const Tableau& lr, bool validate) {
    return run_forward(lr, validate);
}

BranchPair map_inverse_traced(const Tableau& hw, bool validate) {
    return run_inverse(hw, validate);
}

bool is_n_symplectic(const Tableau& t, int n) {
    if (n < 1)
        throw DomainError("is_n_symplectic needs a positive rank");
    const SkewShape& sh = t.shape();
    for (int r = n + 1; r <= sh.rows(); ++r) {
        for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
            const auto& a = t.at(r, c);
            if (!a)
                continue;
            if (a->is_barred())
                throw DomainError("is_n_symplectic applies to unbarred tableaux");
            if (a->value() < 2 * (r - n))
                return false;
        }
    }
    return true;
}

bool has_deep_one(const Tableau& lr, int n) {
    Tableau t = lr;
    while (true) {
        const SkewShape& sh = t.shape();
        for (int r = n + 1; r <= sh.rows(); ++r)
            for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c)
                if (const auto& a = t.at(r, c); a && *a == Letter::unbarred(1))
                    return true;
        if (t.empty())
            return false;
        t = iota_lr(t, false).out;
    }
}

bool fillings_within(const Tableau& t, int n) {
    for (Letter a : t.reading())
        if (a.value() > n)
            return false;
    return true;
}

} // namespace spbranch
