#pragma once

#include <span>
#include <string>
#include <vector>

#include "pqclan/clan.hpp"
#include "pqclan/permutation.hpp"

namespace pqclan {

/// The four position sets attached to a clan (all 1-based, ascending).
struct GammaSets {
    std::vector<int> plus;         // '+' or second occurrence
    std::vector<int> minus;        // '-' or first occurrence
    std::vector<int> tilde_plus;   // '+' or first occurrence
    std::vector<int> tilde_minus;  // '-' or second occurrence
};

GammaSets gamma_sets(const Clan& clan);

/// Assigns p, ..., 1 to the positions of gamma_+ (left to right) and n, ..., p+1 to gamma_-.
Permutation u_of_clan(const Clan& clan);
/// Assigns 1, ..., p to the positions of ~gamma_+ and p+1, ..., n to ~gamma_-.
Permutation v_of_clan(const Clan& clan);

/// A (p,q)-pair: u shuffles 1..q with q+1..n, v shuffles 1..p with p+1..n.
struct PqPair {
    int p;
    int q;
    Permutation u;
    Permutation v;
};

bool is_pq_pair(const Permutation& u, const Permutation& v, int p, int q);

/// Every (p,q)-pair, ordered by u then v.
std::vector<PqPair> enumerate_pq_pairs(int p, int q);

enum class HighLow { Plus, Minus, High, Low };

class HighLowPattern {
public:
    explicit HighLowPattern(std::vector<HighLow> tokens) : tokens_(std::move(tokens)) {}

    std::span<const HighLow> tokens() const noexcept { return tokens_; }
    /// True iff every prefix has at least as many H as L.
    bool dominant() const noexcept;
    /// The FS-pattern obtained by reading H as F and L as S. Requires dominant().
    FsPattern to_fs_pattern() const;
    /// "(+,H,L,-)".
    std::string to_string() const;

    friend bool operator==(const HighLowPattern&, const HighLowPattern&) = default;

private:
    std::vector<HighLow> tokens_;
};

/// a must shuffle p..1 with n..p+1 and b must shuffle 1..p with p+1..n; throws PreconditionError
/// otherwise.
HighLowPattern high_low_pattern(const Permutation& a, const Permutation& b, int p);

/// a >= b in Bruhat order, decided from the high-low pattern. Same preconditions.
bool comparable(const Permutation& a, const Permutation& b, int p);

/// gamma(u, v): the 1212-avoiding clan with u_of_clan = w0*u and v_of_clan = v.
/// Throws NotPqPair, or IncomparablePair when w0*u and v are not comparable.
Clan clan_of_pair(const PqPair& pair);

/// w0 o u.
Permutation reverse_values(const Permutation& u);

}  // namespace pqclan
