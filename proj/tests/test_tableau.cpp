#include <doctest.h>

#include "spbranch/tableau.hpp"

using namespace spbranch;

namespace {

Tableau straight(const std::vector<int>& outer, const std::vector<std::vector<int>>& rows) {
    return Tableau::from_rows(SkewShape(Partition(outer), Partition()), rows);
}

} // namespace

TEST_CASE("letter order") {
    Letter one = Letter::unbarred(1);
    Letter two = Letter::unbarred(2);
    Letter two_bar = Letter::barred(2);
    Letter one_bar = Letter::barred(1);
    CHECK(one < two);
    CHECK(two < two_bar);
    CHECK(two_bar < one_bar);
    CHECK(one < one_bar);
    CHECK(Letter::from_code(-3) == Letter::barred(3));
    CHECK_THROWS_AS(Letter::from_code(0), DomainError);
    CHECK_THROWS_AS(Letter::unbarred(-1), DomainError);
}

TEST_CASE("far-eastern reading") {
    Tableau y = straight({3, 2, 1}, {{1, 2, 3}, {4, 5}, {6}});
    Word expect;
    for (int code : {3, 2, 5, 1, 4, 6})
        expect.push_back(Letter::unbarred(code));
    CHECK(y.reading() == expect);

    CHECK(Tableau(SkewShape(Partition(), Partition())).reading().empty());
    Tableau col = straight({1, 1}, {{1}, {2}});
    CHECK(col.reading() == Word{Letter::unbarred(1), Letter::unbarred(2)});
}

TEST_CASE("semistandardness") {
    CHECK(is_semistandard(straight({2, 2}, {{1, 1}, {-1, -1}})));
    CHECK(is_semistandard(straight({2, 1}, {{1, -1}, {2}})));
    CHECK(!is_semistandard(straight({2, 1}, {{2, 1}, {3}})));
    CHECK(!is_semistandard(straight({1, 1}, {{1}, {1}})));

    // holes compare vacuously
    Tableau holed = straight({2, 2}, {{1, 1}, {2, 2}});
    holed.clear_cell(1, 1);
    CHECK(is_semistandard(holed));
    Tableau masked = straight({2, 1}, {{2, 1}, {3}});
    CHECK(!is_semistandard(masked));
    masked.clear_cell(1, 1);
    CHECK(is_semistandard(masked)); // the violating pair involved the hole
}

TEST_CASE("weights") {
    Tableau col = straight({1, 1, 1, 1}, {{1}, {2}, {1}, {2}});
    // not semistandard, but the weight map does not care
    GlWeight w = gl_weight(col);
    CHECK(w.count(Letter::unbarred(1)) == 2);
    CHECK(w.count(Letter::unbarred(2)) == 2);
    CHECK(w.total() == 4);
    CHECK(gl_weight(Tableau(SkewShape(Partition(), Partition()))).total() == 0);

    Tableau lr_input = Tableau::from_rows(
        SkewShape(Partition({4, 4, 3, 3, 3, 2}), Partition({3, 2, 1, 1})),
        {{1}, {1, 2}, {1, 3}, {2, 4}, {2, 3, 5}, {4, 6}});
    CHECK(gl_weight(lr_input).to_partition() == Partition({3, 3, 2, 2, 1, 1}));

    Word v{Letter::unbarred(1), Letter::unbarred(1), Letter::barred(1)};
    CHECK(sp_weight(v) == SpWeight({1}));

    Tableau sp_input = straight({4, 4, 3, 3, 3, 2}, {{1, 1, 1, 1},
                                                     {2, 2, 2, 2},
                                                     {3, 3, 3},
                                                     {4, 4, -3},
                                                     {-4, -2, -2},
                                                     {-3, -1}});
    CHECK(sp_weight(sp_input) == SpWeight({3, 2, 1, 1}));
}

TEST_CASE("sp weight of canonical tableau equals the shape") {
    for (const Partition& p : partitions_of(6)) {
        std::vector<std::vector<int>> rows;
        for (int r = 1; r <= p.length(); ++r)
            rows.emplace_back(p.part(r), r);
        Tableau t = Tableau::from_rows(SkewShape(p, Partition()), rows);
        CHECK(sp_weight(t) == SpWeight(p.parts()));
    }
}

TEST_CASE("lattice words") {
    auto word = [](std::initializer_list<int> codes) {
        Word w;
        for (int c : codes)
            w.push_back(Letter::from_code(c));
        return w;
    };
    CHECK(is_lattice_word(word({1, 2, 1, 2})));
    CHECK(!is_lattice_word(word({3, 4, 1, 2})));
    CHECK(is_lattice_word(word({1, 2, 3, 4})));
    CHECK_THROWS_AS(is_lattice_word(word({1, -1})), DomainError);
}

TEST_CASE("littlewood-richardson predicate") {
    SkewShape sh(Partition({3, 2, 1, 1}), Partition({2, 1}));
    CHECK(is_littlewood_richardson(Tableau::from_rows(sh, {{1}, {2}, {3}, {4}})));
    CHECK(is_littlewood_richardson(Tableau::from_rows(sh, {{1}, {2}, {1}, {2}})));
    CHECK(!is_littlewood_richardson(straight({2, 2}, {{1, 3}, {2, 4}})));
}

TEST_CASE("reading round-trip reconstructs straight tableaux") {
    for (const Partition& p : partitions_of(5)) {
        SkewShape sh(p, Partition());
        std::vector<std::vector<int>> rows;
        for (int r = 1; r <= p.length(); ++r)
            rows.emplace_back(p.part(r), r);
        Tableau t = Tableau::from_rows(sh, rows);
        CHECK(tableau_from_reading(sh, t.reading()) == t);
    }
}

TEST_CASE("sp weight normalizes trailing zeros") {
    CHECK(SpWeight({1, 0, 0}) == SpWeight({1}));
    CHECK(SpWeight({2, 1}).is_partition());
    CHECK(!SpWeight({1, 2}).is_partition());
    CHECK(!SpWeight({1, -1}).is_partition());
    CHECK_THROWS_AS(SpWeight({0, 1}).to_partition(), DomainError);
}
