#include <doctest.h>

#include <functional>
#include <set>

#include "spbranch/crystal.hpp"

using namespace spbranch;

namespace {

Word word(std::initializer_list<int> codes) {
    Word w;
    for (int c : codes)
        w.push_back(Letter::from_code(c));
    return w;
}

// Every word over A_n with the given length, recursively.
void all_words(int n, int len, Word& acc, const std::function<void(const Word&)>& f) {
    if (len == 0) {
        f(acc);
        return;
    }
    for (Letter a : alphabet_An(n)) {
        acc.push_back(a);
        all_words(n, len - 1, acc, f);
        acc.pop_back();
    }
}

} // namespace

TEST_CASE("letter marks") {
    CHECK(sp_letter_mark(Letter::unbarred(1), 1) == Mark::Plus);
    CHECK(sp_letter_mark(Letter::barred(1), 1) == Mark::Minus);
    CHECK(sp_letter_mark(Letter::barred(2), 1) == Mark::Plus);
    CHECK(sp_letter_mark(Letter::unbarred(2), 1) == Mark::Minus);
    CHECK(sp_letter_mark(Letter::unbarred(3), 1) == Mark::Neutral);
    CHECK(sp_letter_mark(Letter::barred(3), 1) == Mark::Neutral);
}

TEST_CASE("epsilon and phi") {
    CHECK(epsilon_i(word({1, 1, 2}), 1) == 0);
    CHECK(phi_i(word({1, 1, 2}), 1) == 1);
    CHECK(epsilon_i(word({-1}), 1) == 1);
    CHECK(phi_i(word({-1}), 1) == 0);
    CHECK(epsilon_i({}, 1) == 0);
    CHECK(phi_i({}, 3) == 0);
}

TEST_CASE("raising and lowering") {
    CHECK(sp_raise(word({-1}), 1, 2) == word({-2}));
    CHECK(!sp_raise(word({1, 1, 2}), 1, 2).has_value());
    CHECK(sp_lower(word({1}), 1, 2) == word({2}));
    CHECK(sp_lower(word({2}), 2, 2) == word({-2})); // the fold at i = n
    CHECK(sp_raise(word({-2}), 2, 2) == word({2}));
    CHECK(sp_lower(word({-2}), 1, 2) == word({-1}));
    CHECK_THROWS_AS(sp_lower(word({3}), 1, 2), DomainError); // letter outside A_2
}

TEST_CASE("gl operators") {
    CHECK(gl_lower(word({1}), 1) == word({2}));
    CHECK(!gl_raise(word({1, 2}), 1).has_value());
    CHECK(gl_raise(word({2, 1}), 1) == word({1, 1}));
    CHECK_THROWS_AS(gl_lower(word({-1}), 1), DomainError);
}

TEST_CASE("translation between index sets") {
    CHECK(translate(1, 3) == Letter::unbarred(1));
    CHECK(translate(6, 3) == Letter::barred(1));
    CHECK(translate(4, 3) == Letter::barred(3));
    CHECK_THROWS_AS(translate(7, 3), DomainError);
    for (int n = 1; n <= 4; ++n)
        for (int a = 1; a <= 2 * n; ++a)
            CHECK(translate_back(translate(a, n), n) == a);
}

TEST_CASE("highest weight words") {
    CHECK(is_sp_highest(word({1, 1, 2})));
    CHECK(!is_sp_highest(word({-1})));
    CHECK(is_sp_highest(word({1, 1, -1})));
    CHECK(!is_sp_highest(word({1, 1, -2})));
    CHECK(is_sp_highest({}));
    CHECK_THROWS_AS(is_sp_highest(word({3}), 2), DomainError);

    // the reading of the large worked example
    Tableau t = Tableau::from_rows(SkewShape(Partition({4, 4, 3, 3, 3, 2}), Partition()),
                                   {{1, 1, 1, 1},
                                    {2, 2, 2, 2},
                                    {3, 3, 3},
                                    {4, 4, -3},
                                    {-4, -2, -2},
                                    {-3, -1}});
    CHECK(is_sp_highest(t.reading()));
}

TEST_CASE("raising and lowering are adjoint") {
    for (int n = 1; n <= 3; ++n) {
        for (int len = 0; len <= (n == 3 ? 4 : 6); ++len) {
            Word acc;
            all_words(n, len, acc, [&](const Word& w) {
                for (int i = 1; i <= n; ++i) {
                    if (auto lowered = sp_lower(w, i, n)) {
                        CHECK(sp_raise(*lowered, i, n) == w);
                    }
                    if (auto raised = sp_raise(w, i, n)) {
                        CHECK(sp_lower(*raised, i, n) == w);
                    }
                }
            });
        }
    }
}

TEST_CASE("phi minus epsilon pairs with the weight") {
    for (int n = 2; n <= 3; ++n) {
        Word acc;
        all_words(n, 4, acc, [&](const Word& w) {
            SpWeight wt = sp_weight(w);
            for (int i = 1; i <= n; ++i) {
                int pairing = i < n ? wt.coeff(i) - wt.coeff(i + 1) : wt.coeff(n);
                CHECK(phi_i(w, i) - epsilon_i(w, i) == pairing);
            }
        });
    }
}

TEST_CASE("prefix rule matches vanishing of all raising operators") {
    for (int n = 2; n <= 3; ++n) {
        for (int size = 0; size <= 6; ++size) {
            for (const Partition& lambda : partitions_of(size, -1, 2 * n)) {
                for (const Tableau& t :
                     enumerate_ssyt(SkewShape(lambda, Partition()), alphabet_An(n))) {
                    Word w = t.reading();
                    bool raised = false;
                    for (int i = 1; i <= n && !raised; ++i)
                        raised = sp_raise(w, i, n).has_value();
                    CHECK(is_sp_highest(w, n) == !raised);
                }
            }
        }
    }
}

TEST_CASE("gl lowering preserves semistandardness of readings") {
    for (int n = 1; n <= 2; ++n) {
        for (int size = 1; size <= 5; ++size) {
            for (const Partition& lambda : partitions_of(size, -1, 2 * n)) {
                SkewShape shape(lambda, Partition());
                for (const Tableau& t : enumerate_ssyt(shape, alphabet_An(n))) {
                    Word v;
                    for (Letter a : t.reading())
                        v.push_back(Letter::unbarred(translate_back(a, n)));
                    for (int i = 1; i + 1 <= 2 * n; ++i) {
                        auto lowered = gl_lower(v, i);
                        if (!lowered)
                            continue;
                        Word rendered;
                        for (Letter a : *lowered)
                            rendered.push_back(translate(a.value(), n));
                        CHECK(is_semistandard(tableau_from_reading(shape, rendered)));
                    }
                }
            }
        }
    }
}

TEST_CASE("structure screen") {
    CHECK(validate_sp_structure(canonical_tableau(Partition({3, 1}))));
    CHECK(validate_sp_structure(
        Tableau::from_rows(SkewShape(Partition({2, 2}), Partition()), {{1, 1}, {-1, -1}})));
    CHECK(!validate_sp_structure(
        Tableau::from_rows(SkewShape(Partition({2, 1}), Partition()), {{1, -1}, {2}})));
}

TEST_CASE("every highest tableau passes the structure screen") {
    for (int n = 2; n <= 3; ++n) {
        for (int size = 0; size <= 6; ++size) {
            for (const Partition& lambda : partitions_of(size, -1, 2 * n)) {
                SsytFilter filter;
                filter.require_sp_highest = true;
                for (const Tableau& t :
                     enumerate_ssyt(SkewShape(lambda, Partition()), alphabet_An(n), filter)) {
                    CHECK(is_sp_highest(t.reading(), n));
                    CHECK(validate_sp_structure(t));
                }
            }
        }
    }
}

TEST_CASE("canonical tableau") {
    CHECK(canonical_tableau(Partition({2, 1})) ==
          Tableau::from_rows(SkewShape(Partition({2, 1}), Partition()), {{1, 1}, {2}}));
    CHECK(canonical_tableau(Partition()).empty());
}

TEST_CASE("crystal graphs") {
    CrystalGraph path = crystal_graph(Partition({1}), 1, Algebra::Gl);
    CHECK(path.nodes.size() == 2);
    CHECK(path.edges.size() == 1);

    CrystalGraph sp_path = crystal_graph(Partition({1}), 2, Algebra::Sp);
    REQUIRE(sp_path.nodes.size() == 4);
    REQUIRE(sp_path.edges.size() == 3);
    std::vector<int> labels;
    for (const auto& e : sp_path.edges)
        labels.push_back(e.index);
    CHECK(labels == std::vector<int>{1, 2, 1});
    for (const auto& e : sp_path.edges)
        CHECK(e.target == e.source + 1);

    CrystalGraph column = crystal_graph(Partition({1, 1}), 1, Algebra::Gl);
    CHECK(column.nodes.size() == 1);
    CHECK(column.edges.empty());

    CHECK_THROWS_AS(crystal_graph(Partition({2, 2, 2}), 1, Algebra::Gl), DomainError);
}

TEST_CASE("gl crystal graphs are connected with a unique source") {
    for (int n = 1; n <= 2; ++n) {
        for (int size = 1; size <= 4; ++size) {
            for (const Partition& lambda : partitions_of(size, -1, 2 * n)) {
                CrystalGraph g = crystal_graph(lambda, n, Algebra::Gl);
                std::vector<int> indegree(g.nodes.size(), 0);
                std::vector<std::set<int>> adj(g.nodes.size());
                for (const auto& e : g.edges) {
                    ++indegree[e.target];
                    adj[e.source].insert(e.target);
                    adj[e.target].insert(e.source);
                }
                int sources = 0, source = -1;
                for (std::size_t k = 0; k < g.nodes.size(); ++k) {
                    if (indegree[k] == 0) {
                        ++sources;
                        source = static_cast<int>(k);
                    }
                }
                CHECK(sources == 1);
                CHECK(g.nodes[source] == canonical_tableau(lambda));

                std::set<int> seen{0};
                std::vector<int> stack{0};
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int u : adj[v])
                        if (seen.insert(u).second)
                            stack.push_back(u);
                }
                CHECK(seen.size() == g.nodes.size());
            }
        }
    }
}

TEST_CASE("graph serialization is deterministic") {
    CrystalGraph g = crystal_graph(Partition({1}), 1, Algebra::Gl);
    CHECK(g.to_json() == "{\"nodes\":[\"1\",\"-1\"],\"edges\":[[0,1,1]]}");
    CHECK(g.to_dot().find("n0 -> n1 [label=\"1\"]") != std::string::npos);
}
