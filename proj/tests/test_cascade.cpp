#include <doctest.h>

#include <functional>

#include "spbranch/cascade.hpp"
#include "spbranch/crystal.hpp"
#include "spbranch/enumerate.hpp"

using namespace spbranch;

namespace {

// The worked cascading example: shape (5,5,4,3,1)\(4,1) with three marked
// sequences.
Tableau cascade_host() {
    return Tableau::from_rows(SkewShape(Partition({5, 5, 4, 3, 1}), Partition({4, 1})),
                              {{1}, {1, 1, 1, 2}, {2, 2, 2, 3}, {3, 3, 4}, {4}});
}

const CascadeSequence seq_a{{{1, 5}, {3, 2}, {4, 2}, {5, 1}}}; // fails (II)
const CascadeSequence seq_b{{{2, 2}, {3, 1}, {4, 1}}};         // satisfies (I)-(III)
const CascadeSequence seq_c{{{2, 3}, {3, 3}}};                 // fails (I) and (III)

} // namespace

TEST_CASE("side conditions on the worked example") {
    Tableau host = cascade_host();

    ConditionTriple a = check_conditions(host, seq_a);
    CHECK(a.one);
    CHECK(!a.two); // 1-letters sit between the 1-cell and the 2-cell
    CHECK(a.three);

    ConditionTriple b = check_conditions(host, seq_b);
    CHECK(b.one);
    CHECK(b.two);
    CHECK(b.three);

    ConditionTriple c = check_conditions(host, seq_c);
    CHECK(!c.one);
    CHECK(c.two);
    CHECK(!c.three);

    CHECK_THROWS_AS(check_conditions(host, CascadeSequence{{{1, 5}, {3, 1}}}), DomainError);
}

TEST_CASE("cascading the worked example") {
    Tableau host = cascade_host();

    Tableau out_a = cascade(host, seq_a);
    CHECK(!out_a.at(1, 5).has_value());
    CHECK(*out_a.at(3, 2) == Letter::unbarred(1));
    CHECK(*out_a.at(4, 2) == Letter::unbarred(2));
    CHECK(*out_a.at(5, 1) == Letter::unbarred(3));
    CHECK(*out_a.at(2, 2) == Letter::unbarred(1)); // untouched cells keep their letters
    CHECK(!is_semistandard(out_a));
    {
        Word r = out_a.reading();
        Tableau probe = out_a; // LR condition fails: the reading starts with 2
        CHECK(r.front() == Letter::unbarred(2));
        CHECK(!is_lattice_word(r));
        (void)probe;
    }

    Tableau out_b = cascade(host, seq_b);
    CHECK(!out_b.at(2, 2).has_value());
    CHECK(*out_b.at(3, 1) == Letter::unbarred(1));
    CHECK(*out_b.at(4, 1) == Letter::unbarred(2));
    CHECK(is_semistandard(out_b));
    CHECK(is_lattice_word(out_b.reading()));

    Tableau out_c = cascade(host, seq_c);
    CHECK(!out_c.at(2, 3).has_value());
    CHECK(*out_c.at(3, 3) == Letter::unbarred(1));
    CHECK(!is_semistandard(out_c)); // row 3 now reads 2,2,1,3
    CHECK(is_lattice_word(out_c.reading()));
}

TEST_CASE("single-cell sequence only deletes") {
    Tableau t = Tableau::from_rows(SkewShape(Partition({2, 1}), Partition()), {{1, 1}, {2}});
    Tableau out = cascade(t, CascadeSequence{{{1, 1}, {2, 1}}});
    CHECK(!out.at(1, 1).has_value());
    CHECK(*out.at(2, 1) == Letter::unbarred(1));

    Tableau single = cascade(t, CascadeSequence{{{1, 1}}});
    CHECK(!single.at(1, 1).has_value());
    CHECK(*single.at(2, 1) == Letter::unbarred(2));
}

TEST_CASE("find_last_sequence") {
    Tableau big = Tableau::from_rows(SkewShape(Partition({4, 4, 3, 3, 3, 2}), Partition({3, 2, 1, 1})),
                                     {{1}, {1, 2}, {1, 3}, {2, 4}, {2, 3, 5}, {4, 6}});
    CascadeSequence s = find_last_sequence(big);
    CHECK(s == CascadeSequence{{{3, 2}, {4, 2}, {5, 2}, {6, 1}}});
    CHECK(check_conditions(big, s).all());

    Tableau square = Tableau::from_rows(SkewShape(Partition({2, 2}), Partition()), {{1, 1}, {2, 2}});
    CHECK(find_last_sequence(square) == CascadeSequence{{{1, 1}, {2, 1}}});

    Tableau one = Tableau::from_rows(SkewShape(Partition({1}), Partition()), {{1}});
    CHECK_THROWS_AS(find_last_sequence(one), DomainError);
}

TEST_CASE("cascading under (I)-(III) keeps the tableau conditions") {
    // Hosts range over every Littlewood-Richardson filling of the small skew
    // shapes; for every sequence satisfying the side conditions the cascaded
    // tableau must keep the (hole-aware) semistandard condition, and the
    // lattice condition whenever the cascaded weight is still a partition.
    long long sequences = 0;
    for (int outer_size = 0; outer_size <= 6; ++outer_size) {
        for (const Partition& outer : partitions_of(outer_size)) {
            for (const Partition& inner : sub_partitions(outer)) {
                SkewShape sh(outer, inner);
                int cells = sh.num_cells();
                if (cells < 2)
                    continue;
                for (const Partition& weight : partitions_of(cells)) {
                    for (const Tableau& t : enumerate_lr(sh, weight)) {
                        auto cell_list = t.cells_in_reading_order();
                        std::function<void(CascadeSequence&, int)> extend =
                            [&](CascadeSequence& seq, int next) {
                                if (seq.length() >= 1 && check_conditions(t, seq).all()) {
                                    ++sequences;
                                    Tableau cascaded = cascade(t, seq);
                                    CHECK(is_semistandard(cascaded));
                                    if (sp_weight(cascaded).is_partition())
                                        CHECK(is_lattice_word(cascaded.reading()));
                                }
                                for (const Cell& cell : cell_list) {
                                    if (*t.at(cell.row, cell.col) != Letter::unbarred(next))
                                        continue;
                                    seq.cells.push_back(cell);
                                    extend(seq, next + 1);
                                    seq.cells.pop_back();
                                }
                            };
                        CascadeSequence seq;
                        extend(seq, 1);
                    }
                }
            }
        }
    }
    CHECK(sequences > 100);
}

TEST_CASE("iota_sp on the worked example") {
    Tableau y = Tableau::from_rows(
        SkewShape(Partition({4, 4, 3, 3, 3, 2}), Partition()),
        {{1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3}, {4, 4, -3}, {-4, -2, -2}, {-3, -1}});
    IotaSpResult res = iota_sp(y);
    CHECK(res.record.deleted == Letter::barred(3));
    CHECK(res.record.deleted_at == Cell{6, 1});
    Tableau expect = Tableau::from_rows(
        SkewShape(Partition({4, 4, 3, 3, 3, 1}), Partition()),
        {{1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3}, {4, 4, -3}, {-4, -2, -2}, {-1}});
    CHECK(res.out == expect);
}

TEST_CASE("iota_sp slides and corner cases") {
    Tableau pairs = Tableau::from_rows(SkewShape(Partition({2, 2}), Partition()),
                                       {{1, 1}, {-1, -1}});
    IotaSpResult res = iota_sp(pairs);
    CHECK(res.record.deleted == Letter::barred(1));
    CHECK(res.out == Tableau::from_rows(SkewShape(Partition({2, 1}), Partition()), {{1, 1}, {-1}}));

    CHECK_THROWS_AS(iota_sp(canonical_tableau(Partition({3, 1}))), DomainError);

    // deletion at an outer corner above the bottom row
    Tableau corner = Tableau::from_rows(SkewShape(Partition({2, 2, 1}), Partition()),
                                        {{1, 1}, {2, -1}, {3}});
    IotaSpResult res2 = iota_sp(corner);
    CHECK(res2.record.deleted == Letter::barred(1));
    CHECK(res2.record.deleted_at == Cell{2, 2});
    CHECK(res2.out ==
          Tableau::from_rows(SkewShape(Partition({2, 1, 1}), Partition()), {{1, 1}, {2}, {3}}));
}

TEST_CASE("iota_sp_inverse") {
    Tableau t = Tableau::from_rows(SkewShape(Partition({2, 1}), Partition()), {{1, 1}, {-1}});
    Tableau grown = iota_sp_inverse(t, Partition({2, 2}), Letter::barred(1));
    CHECK(grown ==
          Tableau::from_rows(SkewShape(Partition({2, 2}), Partition()), {{1, 1}, {-1, -1}}));

    Tableau row = Tableau::from_rows(SkewShape(Partition({2}), Partition()), {{1, 1}});
    CHECK(iota_sp_inverse(row, Partition({2, 1}), Letter::barred(1)) ==
          Tableau::from_rows(SkewShape(Partition({2, 1}), Partition()), {{1, 1}, {-1}}));

    // inserting 2bar under a canonical row is semistandard but not highest
    CHECK_THROWS_AS(iota_sp_inverse(row, Partition({2, 1}), Letter::barred(2)), DomainError);
    CHECK_THROWS_AS(iota_sp_inverse(row, Partition({3, 1}), Letter::barred(1)), DomainError);
    CHECK_THROWS_AS(iota_sp_inverse(row, Partition({2, 1}), Letter::unbarred(1)), DomainError);
}

TEST_CASE("iota_sp round-trips over all small highest tableaux") {
    for (int size = 1; size <= 7; ++size) {
        for (const Partition& lambda : partitions_of(size, -1, 4)) {
            SsytFilter filter;
            filter.require_sp_highest = true;
            for (const Tableau& t : enumerate_ssyt(SkewShape(lambda, Partition()),
                                                   alphabet_An(lambda.length()), filter)) {
                bool barred = false;
                for (Letter a : t.reading())
                    barred = barred || a.is_barred();
                if (!barred)
                    continue;
                IotaSpResult res = iota_sp(t);
                CHECK(is_sp_highest(res.out.reading()));
                Tableau back =
                    iota_sp_inverse(res.out, t.shape().outer(), res.record.deleted);
                CHECK(back == t);
            }
        }
    }
}

TEST_CASE("iota_lr on the worked example") {
    Tableau y = Tableau::from_rows(SkewShape(Partition({4, 4, 3, 3, 3, 2}), Partition({3, 2, 1, 1})),
                                   {{1}, {1, 2}, {1, 3}, {2, 4}, {2, 3, 5}, {4, 6}});
    IotaLrResult res = iota_lr(y);
    CHECK(res.record.seq == CascadeSequence{{{3, 2}, {4, 2}, {5, 2}, {6, 1}}});
    CHECK(res.record.row_of_one == 3);
    CHECK(res.record.deleted_row == 6);
    Tableau expect =
        Tableau::from_rows(SkewShape(Partition({4, 4, 3, 3, 3, 1}), Partition({3, 2, 2, 1})),
                           {{1}, {1, 2}, {3}, {1, 4}, {2, 2, 5}, {6}});
    CHECK(res.out == expect);
}

TEST_CASE("iota_lr on a 2x2 square") {
    Tableau square = Tableau::from_rows(SkewShape(Partition({2, 2}), Partition()), {{1, 1}, {2, 2}});
    IotaLrResult res = iota_lr(square);
    Tableau expect =
        Tableau::from_rows(SkewShape(Partition({2, 1}), Partition({1})), {{1}, {2}});
    CHECK(res.out == expect);
    CHECK(res.record.row_of_one == 1);
    CHECK(res.record.deleted_row == 2);

    CHECK_THROWS_AS(iota_lr(Tableau(SkewShape(Partition({2}), Partition({2})))), DomainError);
}

TEST_CASE("iota_lr_inverse") {
    Tableau small = Tableau::from_rows(SkewShape(Partition({2, 1}), Partition({1})), {{1}, {2}});
    Tableau back = iota_lr_inverse(small, SkewShape(Partition({2, 2}), Partition()));
    CHECK(back ==
          Tableau::from_rows(SkewShape(Partition({2, 2}), Partition()), {{1, 1}, {2, 2}}));

    Tableau big_out =
        Tableau::from_rows(SkewShape(Partition({4, 4, 3, 3, 3, 1}), Partition({3, 2, 2, 1})),
                           {{1}, {1, 2}, {3}, {1, 4}, {2, 2, 5}, {6}});
    Tableau big_in = iota_lr_inverse(
        big_out, SkewShape(Partition({4, 4, 3, 3, 3, 2}), Partition({3, 2, 1, 1})));
    CHECK(big_in ==
          Tableau::from_rows(SkewShape(Partition({4, 4, 3, 3, 3, 2}), Partition({3, 2, 1, 1})),
                             {{1}, {1, 2}, {1, 3}, {2, 4}, {2, 3, 5}, {4, 6}}));

    // inner shapes differing in two rows
    CHECK_THROWS_AS(
        iota_lr_inverse(Tableau(SkewShape(Partition({2, 1}), Partition({2, 1}))),
                        SkewShape(Partition({2, 2}), Partition({1}))),
        DomainError);
}

TEST_CASE("iota_lr round-trips over all small branch tableaux") {
    for (int size = 2; size <= 7; ++size) {
        for (const Partition& outer : partitions_of(size, -1, 4)) {
            for (const Partition& inner : sub_partitions(outer)) {
                SkewShape sh(outer, inner);
                if (sh.num_cells() < 2 || sh.num_cells() % 2 != 0)
                    continue;
                for (const Partition& nu : even_conjugate_weights(sh.num_cells())) {
                    for (const Tableau& t : enumerate_lr(sh, nu)) {
                        IotaLrResult res = iota_lr(t);
                        Tableau back = iota_lr_inverse(
                            res.out, SkewShape(res.record.lambda_before, res.record.mu_before));
                        CHECK(back == t);
                    }
                }
            }
        }
    }
}

TEST_CASE("iota maps are injective shape by shape") {
    // images of distinct inputs with the same (lambda, mu) stay distinct
    for (int size = 2; size <= 8; ++size) {
        for (const Partition& outer : partitions_of(size, -1, 4)) {
            for (const Partition& inner : sub_partitions(outer)) {
                SkewShape sh(outer, inner);
                if (sh.num_cells() % 2 != 0)
                    continue;
                std::vector<Word> lr_images;
                for (const Partition& nu : even_conjugate_weights(sh.num_cells()))
                    for (const Tableau& t : enumerate_lr(sh, nu))
                        lr_images.push_back(iota_lr(t).out.reading());
                std::sort(lr_images.begin(), lr_images.end());
                CHECK(std::adjacent_find(lr_images.begin(), lr_images.end()) == lr_images.end());
            }
        }

        for (const Partition& lambda : partitions_of(size, -1, 4)) {
            SsytFilter filter;
            filter.require_sp_highest = true;
            std::map<SpWeight, std::vector<Word>> sp_images;
            for (const Tableau& t : enumerate_ssyt(SkewShape(lambda, Partition()),
                                                   alphabet_An(lambda.length()), filter)) {
                bool barred = false;
                for (Letter a : t.reading())
                    barred = barred || a.is_barred();
                if (!barred)
                    continue;
                sp_images[sp_weight(t)].push_back(iota_sp(t).out.reading());
            }
            for (auto& [w, images] : sp_images) {
                std::sort(images.begin(), images.end());
                CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
            }
        }
    }
}

TEST_CASE("step record lines") {
    Tableau square = Tableau::from_rows(SkewShape(Partition({2, 2}), Partition()), {{1, 1}, {2, 2}});
    IotaLrResult res = iota_lr(square);
    CHECK(res.record.to_line() == "iota_lr: s=[(1,1),(2,1)] m=2 row_of_one=1");

    Tableau pairs = Tableau::from_rows(SkewShape(Partition({2, 2}), Partition()),
                                       {{1, 1}, {-1, -1}});
    CHECK(iota_sp(pairs).record.to_line() == "iota_sp: deleted=-1 at (2,1)");
}
