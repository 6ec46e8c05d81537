#include "pqclan/schubert_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "parallel.hpp"
#include "pqclan/error.hpp"

namespace pqclan {

namespace {

using Coefficient = Polynomial::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("polynomial coefficient overflow in addition");
    return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("polynomial coefficient overflow in multiplication");
    return r;
}

int degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void require_same_nvars(const Polynomial& a, const Polynomial& b, const char* what) {
    if (a.nvars() != b.nvars()) {
        throw RankMismatch(std::string(what) + ": polynomials in " + std::to_string(a.nvars()) + " and " +
                           std::to_string(b.nvars()) + " variables");
    }
}

// Drops trailing fixed points beyond `rank`, or throws if w moves something there.
Permutation restrict_to(const Permutation& w, int rank) {
    if (w.size() <= rank) return w;
    for (int k = rank + 1; k <= w.size(); ++k) {
        if (w(k) != k) {
            throw PreconditionError(w.to_string() + " does not embed in S_" + std::to_string(rank));
        }
    }
    auto img = w.one_line();
    return Permutation(std::vector<int>(img.begin(), img.begin() + rank));
}

Permutation extend_to(const Permutation& w, int rank) {
    std::vector<int> img(w.one_line().begin(), w.one_line().end());
    for (int k = w.size() + 1; k <= rank; ++k) img.push_back(k);
    return Permutation(std::move(img));
}

Polynomial staircase(int n) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n - 1 - i);
    return Polynomial::monomial(std::move(e));
}

}  // namespace

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const noexcept {
    const int da = degree_of(a);
    const int db = degree_of(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw InvalidValue("negative variable count");
}

Polynomial Polynomial::constant(int nvars, Coefficient c) {
    Polynomial f(nvars);
    f.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return f;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw IndexOutOfRange("variable x_" + std::to_string(i) + " out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponent exponent, Coefficient c) {
    Polynomial f(static_cast<int>(exponent.size()));
    f.add_term(exponent, c);
    return f;
}

Coefficient Polynomial::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

Coefficient Polynomial::constant_term() const {
    return coefficient(Exponent(static_cast<std::size_t>(nvars_), 0));
}

int Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    const int d = degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
        if (degree_of(e) != d) throw InvalidValue("polynomial is not homogeneous");
    }
    return d;
}

void Polynomial::add_term(const Exponent& exponent, Coefficient c) {
    if (static_cast<int>(exponent.size()) != nvars_) {
        throw RankMismatch("exponent vector of length " + std::to_string(exponent.size()) + " in a polynomial of " +
                           std::to_string(nvars_) + " variables");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::swap_variables(int i) const {
    if (i < 1 || i >= nvars_) throw IndexOutOfRange("swap_variables index " + std::to_string(i));
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent swapped = e;
        std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
        out.terms_.emplace(std::move(swapped), c);
    }
    return out;
}

Polynomial Polynomial::with_nvars(int nvars) const {
    Polynomial out(nvars);
    for (const auto& [e, c] : terms_) {
        Exponent resized = e;
        for (std::size_t k = static_cast<std::size_t>(nvars); k < resized.size(); ++k) {
            if (resized[k] != 0) throw PreconditionError("cannot drop a variable that occurs in the polynomial");
        }
        resized.resize(static_cast<std::size_t>(nvars), 0);
        out.terms_.emplace(std::move(resized), c);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool is_constant = degree_of(e) == 0;
        Coefficient magnitude = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (magnitude != 1 || is_constant) {
            os << magnitude;
            wrote = true;
        }
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (wrote) os << '*';
            os << 'x' << (k + 1);
            if (e[k] > 1) os << '^' << int(e[k]);
            wrote = true;
        }
    }
    return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_nvars(a, b, "addition");
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_nvars(a, b, "subtraction");
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_) {
        if (c == std::numeric_limits<Coefficient>::min()) throw OverflowError("coefficient overflow in negation");
        out.add_term(e, -c);
    }
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_nvars(a, b, "multiplication");
    Polynomial out(a.nvars_);
    Exponent e(static_cast<std::size_t>(a.nvars_), 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) {
                const int sum = ea[k] + eb[k];
                if (sum > 255) throw OverflowError("exponent overflow in multiplication");
                e[k] = static_cast<std::uint8_t>(sum);
            }
            out.add_term(e, checked_mul(ca, cb));
        }
    }
    return out;
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial divided_difference(int i, const Polynomial& f) {
    if (i < 1 || i >= f.nvars()) {
        throw IndexOutOfRange("divided difference d_" + std::to_string(i) + " in " + std::to_string(f.nvars()) +
                              " variables");
    }
    const auto left = static_cast<std::size_t>(i - 1);
    const auto right = left + 1;
    Polynomial out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        const int a = e[left];
        const int b = e[right];
        if (a == b) continue;
        // (x^a y^b - x^b y^a) / (x - y) = sign * (xy)^lo * sum_k x^(hi-1-k) y^k
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        const Coefficient signed_c = a > b ? c : -c;
        Exponent term = e;
        for (int k = 0; k < hi - lo; ++k) {
            term[left] = static_cast<std::uint8_t>(hi - 1 - k);
            term[right] = static_cast<std::uint8_t>(lo + k);
            out.add_term(term, signed_c);
        }
    }
    return out;
}

Polynomial divided_difference(std::span<const int> word, const Polynomial& f) {
    Polynomial out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = divided_difference(*it, out);
    return out;
}

Polynomial schubert_polynomial_from_staircase(const Permutation& w, int nvars, std::span<const int> word_of_complement) {
    const Permutation embedded = extend_to(restrict_to(w, nvars), nvars);
    const Permutation complement = compose(embedded.inverse(), Permutation::longest(nvars));
    Word word;
    if (word_of_complement.empty()) {
        word = canonical_reduced_word(complement);
    } else {
        word.assign(word_of_complement.begin(), word_of_complement.end());
        if (static_cast<int>(word.size()) != length(complement) || word_to_permutation(word, nvars) != complement) {
            throw PreconditionError("supplied word is not a reduced word of w^{-1} w0");
        }
    }
    return divided_difference(word, staircase(nvars));
}

Polynomial schubert_polynomial(const Permutation& w, int nvars) {
    const Permutation base = restrict_to(w, nvars);
    return schubert_polynomial_from_staircase(base, base.size()).with_nvars(nvars);
}

Coefficient oracle_constant(const Permutation& u, const Permutation& v, const Permutation& w) {
    if (u.size() != v.size() || u.size() != w.size()) {
        throw RankMismatch("oracle_constant: u, v, w must lie in the same S_n");
    }
    const int nvars = 2 * u.size();
    const Polynomial product = multiply(schubert_polynomial(u, nvars), schubert_polynomial(v, nvars));
    return divided_difference(canonical_reduced_word(w), product).constant_term();
}

std::vector<std::pair<Permutation, Coefficient>> oracle_expand(const Permutation& u, const Permutation& v,
                                                               unsigned threads) {
    if (u.size() != v.size()) throw RankMismatch("oracle_expand: u and v must lie in the same S_n");
    const int nvars = 2 * u.size();
    const Polynomial product = multiply(schubert_polynomial(u, nvars), schubert_polynomial(v, nvars));
    const auto candidates = enumerate_by_length(u.size(), length(u) + length(v));
    const auto coefficients = parallel_map(candidates.size(), threads, [&](std::size_t k) {
        return divided_difference(canonical_reduced_word(candidates[k]), product).constant_term();
    });
    std::vector<std::pair<Permutation, Coefficient>> out;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (coefficients[k] != 0) out.emplace_back(candidates[k], coefficients[k]);
    }
    return out;
}

}  // namespace pqclan
