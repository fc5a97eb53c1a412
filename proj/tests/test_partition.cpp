#include <doctest.h>

#include "spbranch/partition.hpp"

using namespace spbranch;

TEST_CASE("partition normalization and derived data") {
    Partition p({3, 2, 0, 0});
    CHECK(p == Partition({3, 2}));
    CHECK(p.length() == 2);
    CHECK(p.size() == 5);
    CHECK(p.part(1) == 3);
    CHECK(p.part(7) == 0);
    CHECK(Partition().empty());
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, -1}), DomainError);
}

TEST_CASE("containment") {
    Partition lambda({3, 2, 1, 1});
    CHECK(lambda.contains(Partition({2, 1})));
    CHECK(lambda.contains(Partition()));
    CHECK(!lambda.contains(Partition({4})));
    CHECK(!lambda.contains(Partition({1, 1, 1, 1, 1})));
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({3, 3, 1, 1, 1, 1})) == Partition({6, 2, 2}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("conjugate is an involution") {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("even conjugate weights") {
    CHECK(even_conjugate_weights(0) == std::vector<Partition>{Partition()});
    CHECK(even_conjugate_weights(2) == std::vector<Partition>{Partition({1, 1})});
    CHECK(even_conjugate_weights(4) ==
          std::vector<Partition>{Partition({2, 2}), Partition({1, 1, 1, 1})});
    CHECK_THROWS_AS(even_conjugate_weights(3), DomainError);
}

TEST_CASE("even conjugate weights match filtering all partitions") {
    for (int s = 0; s <= 12; s += 2) {
        std::vector<Partition> expected;
        for (const Partition& nu : partitions_of(s)) {
            bool all_even = true;
            Partition conj = conjugate(nu);
            for (int part : conj.parts())
                all_even = all_even && part % 2 == 0;
            if (all_even)
                expected.push_back(nu);
        }
        std::vector<Partition> got = even_conjugate_weights(s);
        REQUIRE(got.size() == expected.size());
        for (const Partition& nu : got) {
            CHECK(nu.size() == s);
            bool found = false;
            for (const Partition& e : expected)
                found = found || e == nu;
            CHECK(found);
        }
        // reverse lexicographic order
        for (std::size_t i = 1; i < got.size(); ++i)
            CHECK(got[i - 1].parts() > got[i].parts());
    }
}

TEST_CASE("skew shapes") {
    SkewShape sh(Partition({3, 2, 1, 1}), Partition({2, 1}));
    CHECK(sh.num_cells() == 4);
    CHECK(sh.has_cell(1, 3));
    CHECK(!sh.has_cell(1, 2));
    CHECK(sh.has_cell(4, 1));
    CHECK(!sh.has_cell(5, 1));
    CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({3})), DomainError);

    // empty rows are kept: (3,2,1)\(2,1,1) and (3,2)\(2,1) are different shapes
    SkewShape a(Partition({3, 2, 1}), Partition({2, 1, 1}));
    SkewShape b(Partition({3, 2}), Partition({2, 1}));
    CHECK(a != b);
    CHECK(a.num_cells() == b.num_cells());
}

TEST_CASE("sub partitions") {
    auto subs = sub_partitions(Partition({2, 1}));
    std::vector<Partition> expected = {Partition({2, 1}), Partition({2}), Partition({1, 1}),
                                       Partition({1}), Partition()};
    CHECK(subs.size() == expected.size());
    for (const Partition& e : expected) {
        bool found = false;
        for (const Partition& s : subs)
            found = found || s == e;
        CHECK(found);
    }
    CHECK(sub_partitions(Partition({2, 1}), 1).size() == 3); // (), (1), (2)
}
