#include <doctest.h>

#include "test_support.hpp"

using namespace pqclan;
using pqclan::testing::clan;
using pqclan::testing::perm;

namespace {

// r_w(i, j) counted directly from the one-line notation.
int rank_entry(const Permutation& w, int i, int j) {
    int count = 0;
    for (int k = 1; k <= i; ++k) count += w(k) <= j;
    return count;
}

}  // namespace

TEST_CASE("gamma position sets") {
    const auto sets = gamma_sets(clan("+ - 1 2 2 1", 3, 3));
    CHECK(sets.plus == std::vector<int>{1, 5, 6});
    CHECK(sets.minus == std::vector<int>{2, 3, 4});
    CHECK(sets.tilde_plus == std::vector<int>{1, 3, 4});
    CHECK(sets.tilde_minus == std::vector<int>{2, 5, 6});
}

TEST_CASE("u and v of a clan") {
    CHECK(u_of_clan(clan("+ - 1 2 2 1", 3, 3)) == perm("365421"));
    CHECK(v_of_clan(clan("+ - 1 2 2 1", 3, 3)) == perm("142356"));
    CHECK(u_of_clan(clan("+ 1 - 1", 2, 2)) == perm("2431"));
    CHECK(u_of_clan(clan("+ 1 1 2 3 - 3 2", 4, 4)) == perm("48376521"));
    CHECK(v_of_clan(clan("+ 1 1 2 3 - 3 2", 4, 4)) == perm("12534678"));

    SUBCASE("u is the maximum of W+ and v the minimum of W-, p + q <= 5") {
        for (int n = 1; n <= 5; ++n) {
            const auto perms = all_permutations(n);
            const auto w0 = Permutation::longest(n);
            for (int p = 0; p <= n; ++p) {
                const int q = n - p;
                for (const auto& g : enumerate_clans(p, q)) {
                    const Permutation u = u_of_clan(g);
                    const Permutation v = v_of_clan(g);
                    bool u_in = false;
                    bool v_in = false;
                    for (const auto& w : perms) {
                        bool plus_ok = true;
                        bool minus_ok = true;
                        const Permutation rev = compose(w0, w);
                        for (int i = 1; i <= n; ++i) {
                            plus_ok = plus_ok && rank_entry(w, i, p) == gamma_plus(g, i);
                            minus_ok = minus_ok && rank_entry(rev, i, q) == gamma_minus(g, i);
                        }
                        if (plus_ok) {
                            REQUIRE(bruhat_leq_sorted(w, u));
                            u_in = u_in || w == u;
                        }
                        if (minus_ok) {
                            REQUIRE(bruhat_leq_sorted(v, w));
                            v_in = v_in || w == v;
                        }
                    }
                    REQUIRE(u_in);
                    REQUIRE(v_in);
                }
            }
        }
    }
}

TEST_CASE("(p,q)-pairs") {
    CHECK(is_pq_pair(perm("31425"), perm("14253"), 3, 2));
    CHECK(is_pq_pair(perm("51623478"), perm("12534678"), 4, 4));
    CHECK_FALSE(is_pq_pair(perm("21345"), perm("14253"), 3, 2));
    CHECK_FALSE(is_pq_pair(perm("31425"), perm("13245"), 3, 2));
    CHECK(is_pq_pair(Permutation::identity(5), Permutation::identity(5), 1, 4));
    CHECK_THROWS_AS(is_pq_pair(perm("3142"), perm("14253"), 3, 2), RankMismatch);
    CHECK_THROWS_AS(is_pq_pair(perm("31425"), perm("14253"), 2, 2), RankMismatch);

    SUBCASE("count is C(n,p)^2") {
        for (int n = 1; n <= 5; ++n) {
            for (int p = 0; p <= n; ++p) {
                const auto pairs = pqclan::testing::all_pq_pairs(p, n - p);
                for (const auto& [u, v] : pairs) REQUIRE(is_pq_pair(u, v, p, n - p));
                std::size_t hits = 0;
                for (const auto& u : all_permutations(n))
                    for (const auto& v : all_permutations(n)) hits += is_pq_pair(u, v, p, n - p);
                REQUIRE(hits == pairs.size());
                const auto listed = enumerate_pq_pairs(p, n - p);
                REQUIRE(listed.size() == pairs.size());
                for (const auto& pair : listed) {
                    REQUIRE(std::count(pairs.begin(), pairs.end(), std::pair{pair.u, pair.v}) == 1);
                }
            }
        }
    }
}

TEST_CASE("high-low patterns") {
    const auto pattern = high_low_pattern(perm("48376521"), perm("12534678"), 4);
    CHECK(pattern.to_string() == "(+,H,L,H,H,-,L,L)");
    CHECK(pattern.dominant());
    CHECK(pattern.to_fs_pattern() == FsPattern::parse("(+,F,S,F,F,-,S,S)"));
    CHECK(comparable(perm("48376521"), perm("12534678"), 4));
    CHECK_THROWS_AS(high_low_pattern(perm("12534678"), perm("12534678"), 4), PreconditionError);
    CHECK_THROWS_AS(high_low_pattern(perm("48376521"), perm("48376521"), 4), PreconditionError);

    SUBCASE("comparable agrees with Bruhat order, n <= 6") {
        for (int n = 1; n <= 6; ++n) {
            const auto w0 = Permutation::longest(n);
            for (int p = 0; p <= n; ++p) {
                for (const auto& [u, v] : pqclan::testing::all_pq_pairs(p, n - p)) {
                    const Permutation a = compose(w0, u);
                    REQUIRE(comparable(a, v, p) == bruhat_leq_rank(v, a));
                }
            }
        }
    }
}

TEST_CASE("clan of a (p,q)-pair") {
    CHECK(reverse_values(perm("51623478")) == perm("48376521"));
    CHECK(clan_of_pair({4, 4, perm("51623478"), perm("12534678")}) == clan("+ 1 1 2 3 - 3 2", 4, 4));
    CHECK(clan_of_pair({3, 2, perm("31425"), perm("14253")}) == clan("+ - + - +", 3, 2));
    CHECK_THROWS_AS(clan_of_pair({3, 2, perm("21345"), perm("14253")}), NotPqPair);
    // w0 u = 12 and v = 21 in S_2 with p = q = 1: 12 < 21
    CHECK_THROWS_AS(clan_of_pair({1, 1, perm("21"), perm("21")}), IncomparablePair);

    SUBCASE("round trip through avoiding clans, p + q <= 6") {
        for (int n = 1; n <= 6; ++n) {
            for (int p = 0; p <= n; ++p) {
                const int q = n - p;
                for (const auto& g : enumerate_clans(p, q)) {
                    if (!avoids_1212(g)) continue;
                    const PqPair pair{p, q, reverse_values(u_of_clan(g)), v_of_clan(g)};
                    REQUIRE(is_pq_pair(pair.u, pair.v, p, q));
                    REQUIRE(clan_of_pair(pair) == g);
                }
                for (const auto& [u, v] : pqclan::testing::all_pq_pairs(p, q)) {
                    if (!bruhat_leq_rank(v, reverse_values(u))) continue;
                    const Clan g = clan_of_pair({p, q, u, v});
                    REQUIRE(avoids_1212(g));
                    REQUIRE(u_of_clan(g) == reverse_values(u));
                    REQUIRE(v_of_clan(g) == v);
                }
            }
        }
    }
}
