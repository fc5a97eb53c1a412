#include "spbranch/verify.hpp"

#include <algorithm>
#include <sstream>

#include "spbranch/enumerate.hpp"
#include "spbranch/tableau_io.hpp"

namespace spbranch {

namespace {

std::vector<Partition> sweep_lambdas(int max_cells, int max_rows) {
    std::vector<Partition> out;
    for (int size = 0; size <= max_cells; ++size)
        for (Partition& p : partitions_of(size, -1, max_rows))
            out.push_back(std::move(p));
    return out;
}

std::string describe(const Partition& lambda, const Partition& mu, int n) {
    std::ostringstream out;
    out << "lambda=" << lambda.to_string() << " mu=" << mu.to_string() << " n=";
    if (n == UnboundedRank)
        out << "inf";
    else
        out << n;
    return out.str();
}

std::vector<Tableau> branch_lr_set(const SkewShape& shape) {
    std::vector<Tableau> out;
    if (shape.num_cells() % 2 != 0)
        return out;
    for (const Partition& nu : even_conjugate_weights(shape.num_cells()))
        for_each_lr(shape, nu, [&](const Tableau& t) {
            out.push_back(t);
            return true;
        });
    return out;
}

} // namespace

CheckResult verify_main_theorem(const VerifyBounds& bounds) {
    CheckResult res;
    res.name = "main_theorem_counts";
    for (int n : bounds.ranks) {
        for (const Partition& lambda : sweep_lambdas(bounds.max_cells, std::min(bounds.max_rows, 2 * n))) {
            for (const Partition& mu : sub_partitions(lambda, n)) {
                BranchingQuery q{lambda, mu, n};
                long long crystal = count_crystal(q);
                long long sundaram = count_sundaram(q);
                ++res.checked;
                if (crystal != sundaram) {
                    res.pass = false;
                    res.detail = describe(lambda, mu, n) + ": crystal=" + std::to_string(crystal) +
                                 " sundaram=" + std::to_string(sundaram);
                    return res;
                }
            }
        }
    }
    return res;
}

CheckResult verify_stability(const VerifyBounds& bounds) {
    CheckResult res;
    res.name = "stability";
    for (const Partition& lambda : sweep_lambdas(bounds.max_cells, bounds.max_rows)) {
        for (const Partition& mu : sub_partitions(lambda)) {
            long long stable = count_stable(lambda, mu);
            long long previous = -1;
            for (int n : bounds.ranks) {
                if (lambda.length() > 2 * n || mu.length() > n)
                    continue;
                long long sundaram = count_sundaram({lambda, mu, n});
                ++res.checked;
                bool ok = sundaram <= stable && (previous < 0 || previous <= sundaram) &&
                          (n < lambda.length() || sundaram == stable);
                if (!ok) {
                    res.pass = false;
                    res.detail = describe(lambda, mu, n) + ": sundaram=" + std::to_string(sundaram) +
                                 " stable=" + std::to_string(stable);
                    return res;
                }
                previous = sundaram;
            }
        }
    }
    return res;
}

CheckResult verify_bijection(const VerifyBounds& bounds,
                             const std::function<Tableau(const Tableau&)>& forward) {
    CheckResult res;
    res.name = "bijection";
    auto fwd = forward ? forward : [](const Tableau& t) { return map_forward(t); };

    for (const Partition& lambda : sweep_lambdas(bounds.max_cells, bounds.max_rows)) {
        for (const Partition& mu : sub_partitions(lambda)) {
            SkewShape shape(lambda, mu);
            std::vector<Tableau> lrs = branch_lr_set(shape);
            std::vector<Tableau> hws;
            for_each_highest_weight(lambda, UnboundedRank, mu, [&](const Tableau& t) {
                hws.push_back(t);
                return true;
            });

            std::vector<Word> images, expected;
            for (const Tableau& hw : hws)
                expected.push_back(hw.reading());

            for (const Tableau& lr : lrs) {
                ++res.checked;
                Tableau image;
                try {
                    image = fwd(lr);
                    if (!image.is_proper() || !is_semistandard(image) ||
                        !is_sp_highest(image.reading()))
                        throw DomainError("image fails highest-weight validation");
                    if (image.shape().outer() != lambda ||
                        sp_weight(image) != SpWeight::from_partition(mu))
                        throw DomainError("image has wrong shape or weight");
                    if (map_inverse(image) != lr)
                        throw DomainError("round trip is not the identity");
                } catch (const std::exception& e) {
                    res.pass = false;
                    res.detail = describe(lambda, mu, UnboundedRank) + ": " + e.what() + "\n" +
                                 tableau_to_text(lr);
                    return res;
                }
                images.push_back(image.reading());
            }

            std::sort(images.begin(), images.end());
            std::sort(expected.begin(), expected.end());
            if (images != expected) {
                res.pass = false;
                res.detail = describe(lambda, mu, UnboundedRank) + ": image set (" +
                             std::to_string(images.size()) +
                             ") differs from the highest-weight set (" +
                             std::to_string(expected.size()) + ")";
                return res;
            }

            // Deleted letters on the highest-weight side match the row of the
            // 1-cell on the Littlewood-Richardson side, level by level.
            for (const Tableau& hw : hws) {
                BranchPair pair = map_inverse_traced(hw);
                std::size_t levels = pair.trace.size() / 2;
                for (std::size_t k = 0; k < levels; ++k) {
                    const StepRecord& lr_step = pair.trace[k];
                    const StepRecord& sp_step = pair.trace[levels + k];
                    if (sp_step.deleted.value() != lr_step.row_of_one) {
                        res.pass = false;
                        res.detail = describe(lambda, mu, UnboundedRank) +
                                     ": insertion letter does not match the 1-cell row\n" +
                                     tableau_to_text(hw);
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

CheckResult verify_lemma_symplectic(const VerifyBounds& bounds) {
    CheckResult res;
    res.name = "symplectic_filling_lemmas";
    for (const Partition& lambda : sweep_lambdas(bounds.max_cells, bounds.max_rows)) {
        for (const Partition& mu : sub_partitions(lambda)) {
            for (const Tableau& lr : branch_lr_set(SkewShape(lambda, mu))) {
                Tableau image = map_forward(lr);
                for (int n : {2, 3, 4}) {
                    ++res.checked;
                    bool within = fillings_within(image, n);
                    bool symplectic = is_n_symplectic(lr, n);
                    bool deep = has_deep_one(lr, n);
                    if (within != symplectic || within == deep) {
                        res.pass = false;
                        res.detail = describe(lambda, mu, n) + ": fillings/deep-1 mismatch\n" +
                                     tableau_to_text(lr);
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

CheckResult verify_lemma_highest_prefix(const VerifyBounds& bounds) {
    CheckResult res;
    res.name = "highest_prefix_rule";
    for (int n : bounds.ranks) {
        for (const Partition& lambda :
             sweep_lambdas(bounds.crystal_max_cells, std::min(bounds.max_rows, 2 * n))) {
            bool ok = true;
            Tableau witness;
            for_each_ssyt(SkewShape(lambda, Partition()), alphabet_An(n), {},
                          [&](const Tableau& t) {
                              ++res.checked;
                              Word w = t.reading();
                              bool prefix = is_sp_highest(w, n);
                              bool raised = false;
                              for (int i = 1; i <= n && !raised; ++i)
                                  raised = sp_raise(w, i, n).has_value();
                              if (prefix == raised) {
                                  ok = false;
                                  witness = t;
                                  return false;
                              }
                              return true;
                          });
            if (!ok) {
                res.pass = false;
                res.detail = describe(lambda, Partition(), n) + ": prefix rule disagrees\n" +
                             tableau_to_text(witness);
                return res;
            }
        }
    }
    return res;
}

CheckResult verify_lemma_structure(const VerifyBounds& bounds) {
    CheckResult res;
    res.name = "highest_structure_screen";
    for (int n : bounds.ranks) {
        for (const Partition& lambda :
             sweep_lambdas(bounds.crystal_max_cells, std::min(bounds.max_rows, 2 * n))) {
            bool ok = true;
            Tableau witness;
            SsytFilter filter;
            filter.require_sp_highest = true;
            for_each_ssyt(SkewShape(lambda, Partition()), alphabet_An(n), filter,
                          [&](const Tableau& t) {
                              ++res.checked;
                              if (!validate_sp_structure(t)) {
                                  ok = false;
                                  witness = t;
                                  return false;
                              }
                              return true;
                          });
            if (!ok) {
                res.pass = false;
                res.detail = describe(lambda, Partition(), n) + ": screen rejects a highest tableau\n" +
                             tableau_to_text(witness);
                return res;
            }
        }
    }
    return res;
}

namespace {

struct ChainStep {
    int m;
    std::vector<int> positions; // positions[k-1]: the k-cell in the host reading
};

bool strictly_after(const ChainStep& s1, const ChainStep& s2) {
    for (int k = 1; k <= std::min(s1.m, s2.m); ++k)
        if (s1.positions[k - 1] <= s2.positions[k - 1])
            return false;
    return true;
}

bool weakly_before(const ChainStep& s1, const ChainStep& s2) {
    for (int k = 1; k <= std::min(s1.m, s2.m); ++k)
        if (s1.positions[k - 1] > s2.positions[k - 1])
            return false;
    return true;
}

bool strictly_before(const ChainStep& s1, const ChainStep& s2) {
    for (int k = 1; k <= std::min(s1.m, s2.m); ++k)
        if (s1.positions[k - 1] >= s2.positions[k - 1])
            return false;
    return true;
}

} // namespace

CheckResult verify_cascade_orders(const VerifyBounds& bounds) {
    CheckResult res;
    res.name = "cascade_sequence_orders";
    for (const Partition& lambda : sweep_lambdas(bounds.max_cells, bounds.max_rows)) {
        for (const Partition& mu : sub_partitions(lambda)) {
            for (const Tableau& lr : branch_lr_set(SkewShape(lambda, mu))) {
                BranchPair pair = map_forward_traced(lr);
                std::vector<ChainStep> steps;
                for (const StepRecord& rec : pair.trace) {
                    if (rec.kind != StepRecord::Kind::IotaLr)
                        continue;
                    steps.push_back({rec.seq.length(), rec.seq_positions});
                }

                for (std::size_t j = 0; j + 1 < steps.size(); ++j) {
                    ++res.checked;
                    bool ok = steps[j].m <= steps[j + 1].m
                                  ? strictly_after(steps[j], steps[j + 1])
                                  : weakly_before(steps[j], steps[j + 1]);
                    if (!ok) {
                        res.pass = false;
                        res.detail = describe(lambda, mu, UnboundedRank) +
                                     ": consecutive sequence order violated\n" + tableau_to_text(lr);
                        return res;
                    }
                }

                // Windowed order law, with the window width tied to the
                // bottom row of the starting shape.
                int r = lambda.part(lambda.length()) - 1;
                if (r >= 2 && static_cast<int>(steps.size()) >= 2 * r - 1) {
                    auto m_of = [&](int i) { return steps[i - 1].m; }; // 1-based
                    bool pattern = true;
                    for (int i = 1; i + 1 <= r - 1 && pattern; ++i)
                        pattern = m_of(i) <= m_of(i + 1);
                    pattern = pattern && m_of(r - 1) > m_of(r);
                    for (int i = r; i + 1 <= 2 * r - 1 && pattern; ++i)
                        pattern = m_of(i) <= m_of(i + 1);
                    if (pattern) {
                        for (int r0 = 1; r0 <= r - 1; ++r0) {
                            ++res.checked;
                            bool lhs = true, rhs = true;
                            for (int i = 1; i <= r0; ++i) {
                                lhs = lhs && m_of(i) > m_of(i + r);
                                rhs = rhs && strictly_before(steps[i - 1], steps[i + r - 1]);
                            }
                            if (lhs != rhs) {
                                res.pass = false;
                                res.detail = describe(lambda, mu, UnboundedRank) +
                                             ": windowed sequence order violated (r0=" +
                                             std::to_string(r0) + ")\n" + tableau_to_text(lr);
                                return res;
                            }
                        }
                    }
                }
            }
        }
    }
    return res;
}

CheckResult verify_oracle(const VerifyBounds& bounds) {
    CheckResult res;
    res.name = "character_oracle";
    for (int n : bounds.ranks) {
        for (const Partition& lambda :
             sweep_lambdas(bounds.oracle_max_cells, std::min(bounds.oracle_max_rows, 2 * n))) {
            ++res.checked;
            auto stripped = strip_decompose(lambda, n);
            auto crystal = decompose(lambda, n);
            if (stripped != crystal) {
                res.pass = false;
                res.detail = describe(lambda, Partition(), n) + ": stripping and crystal disagree";
                return res;
            }
            long long dim_sum = 0;
            for (const auto& [mu, m] : stripped)
                dim_sum += m * sp_dim(mu, n);
            long long restricted = 0;
            for (const auto& [w, m] : restrict_gl_character(lambda, n))
                restricted += m;
            if (dim_sum != restricted) {
                res.pass = false;
                res.detail = describe(lambda, Partition(), n) + ": dimensions do not add up (" +
                             std::to_string(dim_sum) + " vs " + std::to_string(restricted) + ")";
                return res;
            }
        }
    }
    return res;
}

std::vector<CheckResult> verify_all(const VerifyBounds& bounds) {
    std::vector<CheckResult> out;
    out.push_back(verify_main_theorem(bounds));
    out.push_back(verify_bijection(bounds));
    out.push_back(verify_lemma_symplectic(bounds));
    out.push_back(verify_lemma_highest_prefix(bounds));
    out.push_back(verify_lemma_structure(bounds));
    out.push_back(verify_cascade_orders(bounds));
    out.push_back(verify_stability(bounds));
    out.push_back(verify_oracle(bounds));
    return out;
}

} // namespace spbranch
