#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqclan {

/// A sequence of simple-reflection indices; [i1, ..., ik] denotes s_{i1} s_{i2} ... s_{ik}.
using Word = std::vector<int>;

/// Element of the symmetric group S_n in one-line notation.
///
/// All indices and values are 1-based: w(1), ..., w(n) is a rearrangement of 1..n.
/// Instances are immutable once built.
class Permutation {
public:
    /// Validates that `image` is a bijection of [n]; throws InvalidValue otherwise.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    /// The longest element w0 = n (n-1) ... 1.
    static Permutation longest(int n);
    /// The adjacent transposition s_i in S_n, 1 <= i <= n-1.
    static Permutation simple(int i, int n);

    /// Accepts "31425", "3 1 4 2 5", or "3,1,4,2,5".
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    /// w(i) for 1 <= i <= n.
    int operator()(int i) const;
    std::span<const int> one_line() const noexcept { return image_; }

    Permutation inverse() const;
    /// Digits concatenated when n <= 9, otherwise space separated.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    /// Lexicographic on one-line notation.
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// Number of inversions #{i < j : w(i) > w(j)}.
int length(const Permutation& w);

/// n x n table r_w(i,j) = #{k <= i : w(k) <= j}, stored row-major with 1-based accessors.
class RankMatrix {
public:
    explicit RankMatrix(const Permutation& w);

    int size() const noexcept { return n_; }
    int operator()(int i, int j) const;
    /// Recovers the permutation from the column of the jump in each row.
    Permutation jumps() const;

    friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

private:
    int n_;
    std::vector<int> entries_;
};

inline RankMatrix rank_matrix(const Permutation& w) { return RankMatrix(w); }

/// Bruhat order via entrywise comparison of rank matrices: u <= v iff r_u >= r_v.
bool bruhat_leq_rank(const Permutation& u, const Permutation& v);

/// Bruhat order via the sorted-prefix (tableau) criterion.
bool bruhat_leq_sorted(const Permutation& u, const Permutation& v);

/// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

/// Every w in S_n with length(w) == d, in lexicographic order of one-line notation.
std::vector<Permutation> enumerate_by_length(int n, int d);

/// All permutations of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// The complete set of reduced words of w, sorted lexicographically.
std::vector<Word> reduced_words(const Permutation& w);

/// Deterministic reduced word: repeatedly strip the largest right descent.
/// For example 34251 -> [2, 1, 3, 2, 3, 4].
Word canonical_reduced_word(const Permutation& w);

/// Product s_{i1} s_{i2} ... s_{ik} in S_n. Throws IndexOutOfRange for a letter outside 1..n-1.
Permutation word_to_permutation(std::span<const int> word, int n);

/// "[2, 1, 3, 2, 3, 4]".
std::string format_word(std::span<const int> word);
/// Accepts "2,1,3", "2 1 3", "[2, 1, 3]"; the empty string is the empty word.
Word parse_word(std::string_view text);

}  // namespace pqclan
