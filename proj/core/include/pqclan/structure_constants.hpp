#pragma once

#include <optional>
#include <vector>

#include "pqclan/clan.hpp"
#include "pqclan/permutation.hpp"

namespace pqclan {

/// How the clan rule relates to a (p,q)-pair.
enum class PairStatus {
    Comparable,    // w0*u >= v; the rule applies
    Incomparable,  // every structure constant vanishes
};

struct ExpansionTerm {
    Permutation w;
    int coefficient;

    friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

/// S_u * S_v = sum of coefficient * S_w over the terms.
struct ProductExpansion {
    int p;
    int q;
    Permutation u;
    Permutation v;
    PairStatus status;
    std::optional<Clan> clan;          // gamma(u, v) when comparable
    std::vector<ExpansionTerm> terms;  // sorted by one-line notation of w
};

struct StructureConstant {
    int value;  // 0 or 1
    PairStatus status;
};

/// c_{u,v}^w for a (p,q)-pair: 1 iff l(w) = l(u) + l(v) and w . gamma(u,v) = gamma_0.
/// Throws NotPqPair when the rule does not apply.
StructureConstant structure_constant(const Permutation& u, const Permutation& v, const Permutation& w, int p,
                                     int q);

/// All w with nonzero c_{u,v}^w. Incomparable pairs give an empty expansion, not an error.
/// `threads` = 0 picks the hardware concurrency.
ProductExpansion expand_product(const Permutation& u, const Permutation& v, int p, int q, unsigned threads = 1);

/// W(Y) for the orbit closure of gamma: permutations of length codim(gamma) taking gamma to gamma_0.
std::vector<Permutation> brion_set(const Clan& clan);

/// n(n-1)/2 - orbit_dimension(gamma).
int orbit_codimension(const Clan& clan);

}  // namespace pqclan
