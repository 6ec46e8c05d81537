#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pqclan/permutation.hpp"

namespace pqclan {

/// Exponent vector of a monomial x_1^{e_1} ... x_N^{e_N}.
using Exponent = std::vector<std::uint8_t>;

/// Graded lexicographic order, largest first.
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

/// Sparse multivariate polynomial with overflow-checked 64-bit integer coefficients.
///
/// No zero coefficient is ever stored, so two polynomials are equal iff their term maps are.
class Polynomial {
public:
    using Coefficient = std::int64_t;
    using TermMap = std::map<Exponent, Coefficient, GrlexDescending>;

    explicit Polynomial(int nvars);

    static Polynomial constant(int nvars, Coefficient c);
    /// x_i, 1-based.
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(Exponent exponent, Coefficient c = 1);

    int nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Coefficient coefficient(const Exponent& exponent) const;
    Coefficient constant_term() const;
    /// Total degree if homogeneous, -1 for the zero polynomial; throws InvalidValue otherwise.
    int homogeneous_degree() const;

    /// Adds c * x^exponent in place.
    void add_term(const Exponent& exponent, Coefficient c);

    /// Image under the transposition of x_i and x_{i+1}.
    Polynomial swap_variables(int i) const;
    /// Pads or (if the dropped variables are absent) truncates to `nvars` variables.
    Polynomial with_nvars(int nvars) const;

    /// "x1^2*x2 + x1*x2^2", terms in descending graded lexicographic order; "0" for zero.
    std::string to_string() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    int nvars_;
    TermMap terms_;
};

using SchubertPoly = Polynomial;

/// Exact product; throws RankMismatch when the variable counts differ.
Polynomial multiply(const Polynomial& f, const Polynomial& g);

/// (f - s_i f) / (x_i - x_{i+1}), expanded monomial by monomial without any division.
Polynomial divided_difference(int i, const Polynomial& f);

/// Composite d_{i1} d_{i2} ... d_{ik} f, i.e. d_{ik} is applied first.
Polynomial divided_difference(std::span<const int> word, const Polynomial& f);

/// Schubert polynomial of w in N >= n variables.
///
/// Built from the staircase monomial of S_n and then padded to N variables, which by stability
/// equals the construction starting from the staircase of S_N.
Polynomial schubert_polynomial(const Permutation& w, int nvars);

/// The same polynomial built literally from the staircase x_1^{N-1} ... x_{N-1} of S_N,
/// applying divided differences along `word_of_complement` (a reduced word of w^{-1} w0 in S_N),
/// or along the canonical word when empty.
Polynomial schubert_polynomial_from_staircase(const Permutation& w, int nvars, std::span<const int> word_of_complement = {});

/// Coefficient of S_w in S_u * S_v, via the constant term of d_w (S_u S_v) in 2n variables.
Polynomial::Coefficient oracle_constant(const Permutation& u, const Permutation& v, const Permutation& w);

/// Nonzero coefficients of S_u * S_v over w in S_n with l(w) = l(u) + l(v), sorted by w.
/// `threads` = 0 picks the hardware concurrency.
std::vector<std::pair<Permutation, Polynomial::Coefficient>> oracle_expand(const Permutation& u,
                                                                            const Permutation& v,
                                                                            unsigned threads = 1);

}  // namespace pqclan
