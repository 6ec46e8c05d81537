#include <doctest.h>

#include <queue>

#include "test_support.hpp"

using namespace pqclan;
using pqclan::testing::clan;
using pqclan::testing::perm;

TEST_CASE("simple reflections act by the five rules") {
    CHECK(act_simple(1, clan("+ 1 - 1", 2, 2)) == clan("1 + - 1", 2, 2));
    CHECK(act_simple(2, clan("1 1 + -", 2, 2)) == clan("1 + 1 -", 2, 2));
    CHECK(act_simple(2, clan("1 1 2 2", 2, 2)) == clan("1 2 1 2", 2, 2));
    CHECK(act_simple(2, clan("+ + - -", 2, 2)) == clan("+ 1 1 -", 2, 2));
    CHECK(act_simple(1, clan("+ + - -", 2, 2)) == clan("+ + - -", 2, 2));
    // mate of c_{i+1} to its left: fixed
    CHECK(act_simple(2, clan("1 + 1 -", 2, 2)) == clan("1 + 1 -", 2, 2));
    // equal numbers: fixed
    CHECK(act_simple(1, clan("1 1", 1, 1)) == clan("1 1", 1, 1));

    CHECK(classify_simple(1, clan("+ 1 - 1", 2, 2)) == ActionCase::SignThenOpeningNumber);
    CHECK(classify_simple(2, clan("1 1 + -", 2, 2)) == ActionCase::ClosingNumberThenSign);
    CHECK(classify_simple(2, clan("1 1 2 2", 2, 2)) == ActionCase::NumbersMatesInOrder);
    CHECK(classify_simple(2, clan("+ + - -", 2, 2)) == ActionCase::OppositeSigns);
    CHECK(classify_simple(3, clan("+ + - -", 2, 2)) == ActionCase::Fixed);

    CHECK_THROWS_AS(act_simple(0, clan("+ -", 1, 1)), IndexOutOfRange);
    CHECK_THROWS_AS(act_simple(2, clan("+ -", 1, 1)), IndexOutOfRange);
}

TEST_CASE("monoid laws on all clans with p + q <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& g : pqclan::testing::clans_of_size(n)) {
            for (int i = 1; i < n; ++i) {
                const Clan once = act_simple(i, g);
                REQUIRE(act_simple(i, once) == once);
                const bool opposite = g[i].is_sign() && g[i + 1].is_sign() && g[i] != g[i + 1];
                const bool both_signs_moved = once != g && g[i].is_sign() && g[i + 1].is_sign();
                REQUIRE(opposite == both_signs_moved);
                if (opposite) {
                    // non-compact imaginary roots are type I
                    REQUIRE(cross_action(Permutation::simple(i, n), g) != g);
                }
            }
        }
    }
}

TEST_CASE("words and permutations") {
    const Clan g = clan("+ - + - +", 3, 2);
    CHECK(act_word(Word{}, g) == g);
    CHECK(act_word(Word{2, 1, 3, 2, 3, 4}, g) == clan("1 2 + 2 1", 3, 2));
    CHECK(act_word(Word{4, 3, 2, 4, 3, 4}, g) == clan("+ 1 2 2 1", 3, 2));
    CHECK(act_permutation(Permutation::identity(5), g) == g);
    CHECK(act_permutation(word_to_permutation(Word{3, 2, 1, 4, 3, 2}, 5), g) == clan("1 2 + 2 1", 3, 2));
    CHECK_THROWS_AS(act_word(Word{5}, g), IndexOutOfRange);
    CHECK_THROWS_AS(act_permutation(perm("1234"), g), RankMismatch);

    SUBCASE("reduced words of 321 agree on every (2,1)-clan") {
        const auto words = reduced_words(perm("321"));
        REQUIRE(words.size() == 2);
        for (const auto& c : enumerate_clans(2, 1)) REQUIRE(act_word(words[0], c) == act_word(words[1], c));
    }
}

TEST_CASE("cross action") {
    CHECK(cross_action(Permutation::simple(2, 4), clan("+ + - -", 2, 2)) == clan("+ - + -", 2, 2));
    CHECK(cross_action(Permutation::identity(4), clan("+ 1 - 1", 2, 2)) == clan("+ 1 - 1", 2, 2));
    CHECK(cross_action(Permutation::longest(4), clan("+ 1 - 1", 2, 2)) == clan("1 - 1 +", 2, 2));
    // cross action is a group action: (ab) x g = a x (b x g)
    const auto all = all_permutations(4);
    for (const auto& g : enumerate_clans(2, 2)) {
        for (const auto& a : all) {
            for (const auto& b : {perm("2143"), perm("3412"), perm("1342")}) {
                REQUIRE(cross_action(compose(a, b), g) == cross_action(a, cross_action(b, g)));
            }
        }
    }
}

TEST_CASE("closed and open clans") {
    CHECK(open_clan(3, 2) == clan("1 2 + 2 1", 3, 2));
    CHECK(open_clan(2, 2) == clan("1 2 2 1", 2, 2));
    CHECK(open_clan(1, 3) == clan("1 - - 1", 1, 3));
    CHECK(open_clan(2, 0) == clan("+ +", 2, 0));
    CHECK(closed_clans(1, 1) == std::vector<Clan>{clan("+ -", 1, 1), clan("- +", 1, 1)});
    CHECK(closed_clans(3, 2).size() == 10);
    for (int n = 1; n <= 6; ++n) {
        for (int p = 0; p <= n; ++p) {
            // the open orbit is dense: dimension of the flag variety
            REQUIRE(orbit_dimension(open_clan(p, n - p)) == n * (n - 1) / 2);
            for (const auto& c : closed_clans(p, n - p)) REQUIRE(clan_length(c) == 0);
        }
    }
}

TEST_CASE("weak order graph") {
    const auto g11 = weak_order_graph(1, 1);
    REQUIRE(g11.nodes().size() == 3);
    CHECK(g11.edge_count() == 2);
    const auto sink = g11.index_of(clan("1 1", 1, 1));
    for (const char* text : {"+ -", "- +"}) {
        const auto& edges = g11.out_edges(g11.index_of(clan(text, 1, 1)));
        REQUIRE(edges.size() == 1);
        CHECK(edges[0].target == sink);
        CHECK(edges[0].label == 1);
    }
    CHECK(g11.out_edges(sink).empty());
    CHECK_THROWS_AS(weak_order_graph(6, 5), PreconditionError);
    CHECK_THROWS_AS(g11.index_of(clan("+ + -", 2, 1)), InvalidValue);

    SUBCASE("edges raise dimension by one and every node reaches the open clan") {
        for (int n = 1; n <= 6; ++n) {
            for (int p = 0; p <= n; ++p) {
                const auto graph = weak_order_graph(p, n - p);
                const auto& nodes = graph.nodes();
                REQUIRE(std::is_sorted(nodes.begin(), nodes.end()));
                const auto top = graph.index_of(open_clan(p, n - p));
                for (std::size_t k = 0; k < nodes.size(); ++k) {
                    for (const auto& e : graph.out_edges(k)) {
                        REQUIRE(orbit_dimension(nodes[e.target]) == orbit_dimension(nodes[k]) + 1);
                        REQUIRE(act_simple(e.label, nodes[k]) == nodes[e.target]);
                    }
                    if (k != top) REQUIRE_FALSE(graph.out_edges(k).empty());
                    // breadth-first search to the open clan
                    std::vector<bool> seen(nodes.size(), false);
                    std::queue<std::size_t> frontier;
                    frontier.push(k);
                    seen[k] = true;
                    while (!frontier.empty()) {
                        const auto cur = frontier.front();
                        frontier.pop();
                        for (const auto& e : graph.out_edges(cur)) {
                            if (!seen[e.target]) {
                                seen[e.target] = true;
                                frontier.push(e.target);
                            }
                        }
                    }
                    REQUIRE(seen[top]);
                }
                REQUIRE(graph.out_edges(top).empty());
            }
        }
    }
}

TEST_CASE("DOT output is deterministic") {
    const std::string dot = weak_order_graph(1, 1).to_dot();
    CHECK(dot == weak_order_graph(1, 1).to_dot());
    CHECK(dot ==
          "digraph weak_order_1_1 {\n"
          "  rankdir=BT;\n"
          "  node [shape=box, fontname=\"monospace\"];\n"
          "  n0 [label=\"(+,-)\\ndim 0\"];\n"
          "  n1 [label=\"(-,+)\\ndim 0\"];\n"
          "  n2 [label=\"(1,1)\\ndim 1\"];\n"
          "  n0 -> n2 [label=\"1\"];\n"
          "  n1 -> n2 [label=\"1\"];\n"
          "}\n");
}
