#include <doctest.h>

#include "test_support.hpp"

using namespace pqclan;
using pqclan::testing::perm;

namespace {

Polynomial x(int nvars, int i) { return Polynomial::variable(nvars, i); }

Polynomial random_polynomial(std::mt19937& rng, int nvars, int terms, int max_exp) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-5, 5);
    Polynomial f(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<std::size_t>(nvars));
        for (auto& k : e) k = static_cast<std::uint8_t>(exp(rng));
        f = f + Polynomial::monomial(e, coeff(rng));
    }
    return f;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const Polynomial a = x(2, 1) * x(2, 1) * x(2, 2) + x(2, 1) * x(2, 2) * x(2, 2);
    CHECK(a.to_string() == "x1^2*x2 + x1*x2^2");
    CHECK(Polynomial(3).to_string() == "0");
    CHECK((Polynomial::constant(2, 3) - x(2, 1)).to_string() == "-x1 + 3");
    CHECK(a.homogeneous_degree() == 3);
    CHECK(Polynomial(2).homogeneous_degree() == -1);
    CHECK_THROWS_AS((a + Polynomial::constant(2, 1)).homogeneous_degree(), InvalidValue);
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(x(2, 1) + x(3, 1), RankMismatch);
    CHECK_THROWS_AS(x(2, 3), IndexOutOfRange);
    const Polynomial big = Polynomial::constant(1, std::numeric_limits<Polynomial::Coefficient>::max());
    CHECK_THROWS_AS(big + Polynomial::constant(1, 1), OverflowError);
    CHECK_THROWS_AS(big * Polynomial::constant(1, 2), OverflowError);
}

TEST_CASE("divided differences") {
    CHECK(divided_difference(1, x(2, 1)) == Polynomial::constant(2, 1));
    CHECK(divided_difference(1, x(2, 1) * x(2, 2)).is_zero());
    CHECK(divided_difference(1, x(2, 1) * x(2, 1)) == x(2, 1) + x(2, 2));
    CHECK(divided_difference(1, x(2, 2)) == Polynomial::constant(2, -1));
    CHECK_THROWS_AS(divided_difference(2, x(2, 1)), IndexOutOfRange);

    SUBCASE("nil-Coxeter relations and the defining identity on random input") {
        std::mt19937 rng(20240611);
        for (int trial = 0; trial < 40; ++trial) {
            const Polynomial f = random_polynomial(rng, 4, 6, 4);
            for (int i = 1; i <= 3; ++i) {
                REQUIRE(divided_difference(i, divided_difference(i, f)).is_zero());
                const Polynomial lhs = (x(4, i) - x(4, i + 1)) * divided_difference(i, f);
                REQUIRE(lhs == f - f.swap_variables(i));
            }
            for (int i = 1; i <= 2; ++i) {
                const Word a{i, i + 1, i};
                const Word b{i + 1, i, i + 1};
                REQUIRE(divided_difference(a, f) == divided_difference(b, f));
            }
            REQUIRE(divided_difference(Word{1, 3}, f) == divided_difference(Word{3, 1}, f));
        }
    }
}

TEST_CASE("Schubert polynomials") {
    CHECK(schubert_polynomial(perm("321"), 3) == x(3, 1) * x(3, 1) * x(3, 2));
    CHECK(schubert_polynomial(perm("213"), 3) == x(3, 1));
    CHECK(schubert_polynomial(perm("132"), 3) == x(3, 1) + x(3, 2));
    CHECK(schubert_polynomial(Permutation::identity(4), 6) == Polynomial::constant(6, 1));
    CHECK(schubert_polynomial(perm("1432"), 4).to_string() == "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3");
    CHECK_THROWS_AS(schubert_polynomial(perm("321"), 2), PreconditionError);

    SUBCASE("independent of the reduced word, n <= 4") {
        for (int n = 1; n <= 4; ++n) {
            for (const auto& w : all_permutations(n)) {
                const auto complement = compose(w.inverse(), Permutation::longest(n));
                const Polynomial expected = schubert_polynomial_from_staircase(w, n);
                for (const auto& word : reduced_words(complement)) {
                    REQUIRE(schubert_polynomial_from_staircase(w, n, word) == expected);
                }
                REQUIRE(expected.homogeneous_degree() == length(w));
            }
        }
    }

    SUBCASE("stable under S_n into S_N, n <= 4, N <= 6") {
        for (int n = 1; n <= 4; ++n) {
            for (const auto& w : all_permutations(n)) {
                for (int big = n; big <= 6; ++big) {
                    REQUIRE(schubert_polynomial_from_staircase(w, big) == schubert_polynomial(w, big));
                }
            }
        }
    }
    CHECK_THROWS_AS(schubert_polynomial_from_staircase(perm("321"), 3, Word{1}), PreconditionError);
}

TEST_CASE("oracle expansion") {
    // Monk: S_s1 * S_s1 = x1^2 = S_312 and S_s1 * S_s2 = x1 (x1 + x2) = S_312 + S_231
    const auto s1 = perm("213");
    const auto s2 = perm("132");
    using Term = std::pair<Permutation, Polynomial::Coefficient>;
    CHECK(oracle_expand(s1, s1) == std::vector<Term>{{perm("312"), 1}});
    CHECK(oracle_expand(s1, s2) == std::vector<Term>{{perm("231"), 1}, {perm("312"), 1}});
    CHECK(oracle_constant(s1, s2, perm("231")) == 1);
    CHECK(oracle_constant(s1, s1, perm("231")) == 0);
    CHECK(oracle_expand(Permutation::identity(4), perm("2413")) == std::vector<Term>{{perm("2413"), 1}});

    const auto table = oracle_expand(perm("31425"), perm("14253"), 2);
    CHECK(table.size() == 8);
    for (const auto& [w, c] : table) CHECK(c == 1);

    // Monk: S_s2 * S_s2 = S_2314 + S_1423
    const auto square = oracle_expand(perm("1324"), perm("1324"));
    std::map<std::string, Polynomial::Coefficient> got;
    for (const auto& [w, c] : square) got[w.to_string()] = c;
    CHECK(got == std::map<std::string, Polynomial::Coefficient>{{"1423", 1}, {"2314", 1}});

    SUBCASE("symmetric in u and v, n <= 4") {
        for (int n = 1; n <= 4; ++n) {
            const auto all = all_permutations(n);
            for (std::size_t a = 0; a < all.size(); ++a) {
                for (std::size_t b = a + 1; b < all.size(); b += 3) {
                    REQUIRE(oracle_expand(all[a], all[b]) == oracle_expand(all[b], all[a]));
                }
            }
        }
    }
    CHECK_THROWS_AS(oracle_expand(perm("21"), perm("213")), RankMismatch);
}
