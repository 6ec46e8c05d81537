#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqclan {

/// One character of a clan: a plus sign, a minus sign, or a natural number.
class ClanSymbol {
public:
    static constexpr ClanSymbol plus() noexcept { return ClanSymbol(kPlus); }
    static constexpr ClanSymbol minus() noexcept { return ClanSymbol(kMinus); }
    /// k >= 1.
    static ClanSymbol number(int k);

    constexpr bool is_plus() const noexcept { return code_ == kPlus; }
    constexpr bool is_minus() const noexcept { return code_ == kMinus; }
    constexpr bool is_sign() const noexcept { return code_ < 0; }
    constexpr bool is_number() const noexcept { return code_ > 0; }
    /// Only meaningful when is_number().
    constexpr int value() const noexcept { return code_; }

    /// "+", "-", or the decimal numeral.
    std::string to_string() const;

    friend constexpr bool operator==(ClanSymbol, ClanSymbol) = default;
    /// Orders '+' < '-' < 1 < 2 < ...
    friend constexpr std::strong_ordering operator<=>(ClanSymbol a, ClanSymbol b) noexcept {
        return a.rank() <=> b.rank();
    }

private:
    static constexpr int kPlus = -2;
    static constexpr int kMinus = -1;
    constexpr explicit ClanSymbol(int code) noexcept : code_(code) {}
    constexpr int rank() const noexcept { return code_; }

    int code_;
};

/// A normalized (p,q)-clan.
///
/// Every natural number occurs exactly twice, #plus - #minus = p - q, and the numbers are
/// exactly 1..m labelled in order of first occurrence. Since the labelling is canonical,
/// two clans are equal as clans iff their symbol sequences are equal.
class Clan {
public:
    /// Validates and renumbers; throws InvalidValue on a broken invariant.
    Clan(int p, int q, std::vector<ClanSymbol> symbols);

    /// Whitespace-separated tokens "+", "-" and decimal numerals. Commas and an enclosing pair
    /// of parentheses are tolerated, so "(+,1,-,1)" also parses. Throws ParseError.
    static Clan parse(std::string_view text, int p, int q);

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    int size() const noexcept { return static_cast<int>(symbols_.size()); }
    /// c_i for 1 <= i <= n.
    ClanSymbol operator[](int i) const;
    std::span<const ClanSymbol> symbols() const noexcept { return symbols_; }

    /// Position of the other occurrence of the number at position i (1-based).
    int mate(int i) const;
    /// True when position i holds the first occurrence of its number.
    bool is_first_occurrence(int i) const;
    /// Number of distinct natural numbers.
    int pair_count() const noexcept;

    /// "+ 1 - 1".
    std::string to_string() const;
    /// "(+,1,-,1)".
    std::string to_tuple_string() const;

    friend bool operator==(const Clan&, const Clan&) = default;
    /// Compares (p, q) first, then the symbol sequence lexicographically.
    friend auto operator<=>(const Clan&, const Clan&) = default;

private:
    int p_;
    int q_;
    std::vector<ClanSymbol> symbols_;
    std::vector<int> mates_;  // 0-based mate index, -1 for signs
};

enum class FsToken { Plus, Minus, First, Second };

/// First-second pattern: a string over {+, -, F, S} with #F == #S and every prefix having
/// at least as many F as S.
class FsPattern {
public:
    /// Throws InvalidValue if the balance conditions fail.
    explicit FsPattern(std::vector<FsToken> tokens);
    /// Accepts "+-FS", "+ - F S" or "(+,-,F,S)".
    static FsPattern parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(tokens_.size()); }
    std::span<const FsToken> tokens() const noexcept { return tokens_; }
    int plus_count() const noexcept;
    int minus_count() const noexcept;
    int pair_count() const noexcept;

    /// "(+,F,-,S)".
    std::string to_string() const;

    friend bool operator==(const FsPattern&, const FsPattern&) = default;
    friend auto operator<=>(const FsPattern&, const FsPattern&) = default;

private:
    std::vector<FsToken> tokens_;
};

/// gamma(i;+): plus signs plus completed pairs among c_1..c_i.
int gamma_plus(const Clan& clan, int i);
/// gamma(i;-): minus signs plus completed pairs among c_1..c_i.
int gamma_minus(const Clan& clan, int i);
/// gamma(i;j): pairs c_s = c_t with s <= i < j < t. Requires 1 <= i < j <= n.
int gamma_pair(const Clan& clan, int i, int j);

/// Orbit length l(gamma).
///
/// Sum over pairs c_i = c_j (i < j) of (j - i) minus the number of pairs nested strictly
/// inside on the left boundary, i.e. numbers k with c_s = c_t = k and s < i < t < j.
int clan_length(const Clan& clan);
/// d(K) + l(gamma) with d(K) = (p(p-1) + q(q-1)) / 2.
int orbit_dimension(const Clan& clan);

FsPattern fs_pattern(const Clan& clan);

/// Number of unordered pairs of numbers {a, b} laid out as a...b...a...b.
int count_1212(const Clan& clan);
bool avoids_1212(const Clan& clan);

/// The unique 1212-avoiding clan with the given pattern: each S closes the nearest open F.
/// (p, q) are recovered from the pattern: p = #plus + #pairs, q = #minus + #pairs.
Clan avoiding_clan_from_fs(const FsPattern& pattern);

/// Every clan with the given FS-pattern, sorted.
std::vector<Clan> clans_with_fs(const FsPattern& pattern);

/// Every (p,q)-clan, sorted. Requires p, q >= 0 and p + q >= 1.
std::vector<Clan> enumerate_clans(int p, int q);

/// One interchange step toward the avoiding clan of the same FS-pattern.
///
/// Takes the leftmost interleaved pair a...b...a...b (ordered by the position of the first a,
/// then of the first b) and swaps the second a with the second b. Throws PreconditionError
/// when the clan already avoids 1212.
Clan remove_1212_step(const Clan& clan);

/// Same move for a chosen occurrence: numbers a and b (canonical labels) must interleave.
Clan remove_1212_step(const Clan& clan, int a, int b);

}  // namespace pqclan
