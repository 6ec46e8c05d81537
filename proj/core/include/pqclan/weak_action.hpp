#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pqclan/clan.hpp"
#include "pqclan/permutation.hpp"

namespace pqclan {

/// Which rule of the simple-reflection action applies at (c_i, c_{i+1}).
enum class ActionCase {
    SignThenOpeningNumber,   // (1) swap
    ClosingNumberThenSign,   // (2) swap
    NumbersMatesInOrder,     // (3) swap
    OppositeSigns,           // (4) replace by a fresh pair
    Fixed,                   // (5) no change
};

ActionCase classify_simple(int i, const Clan& clan);

/// s_i . gamma for the monoid M(W); requires 1 <= i <= n-1.
Clan act_simple(int i, const Clan& clan);

/// s_{i1} . (s_{i2} . ( ... (s_{ik} . gamma))).
Clan act_word(std::span<const int> word, const Clan& clan);

/// w . gamma, evaluated along canonical_reduced_word(w).
Clan act_permutation(const Permutation& w, const Clan& clan);

/// Cross action: position i of the result carries the symbol of gamma at w^{-1}(i).
Clan cross_action(const Permutation& w, const Clan& clan);

/// The C(p+q, p) sign-only clans, sorted.
std::vector<Clan> closed_clans(int p, int q);

/// gamma_0 = (1, 2, ..., m, <|p-q| signs>, m, ..., 2, 1) with m = min(p, q).
Clan open_clan(int p, int q);

/// Weak closure order on (p,q)-clans. Every edge is single; there is no multiplicity.
class WeakOrderGraph {
public:
    struct Edge {
        std::size_t target;
        int label;  // simple-root index i

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    WeakOrderGraph(int p, int q);

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    /// Sorted lexicographically on the canonical symbol sequence.
    const std::vector<Clan>& nodes() const noexcept { return nodes_; }
    /// Outgoing edges of node k, sorted by label then target.
    const std::vector<Edge>& out_edges(std::size_t k) const { return adjacency_.at(k); }
    std::size_t edge_count() const noexcept;
    /// Throws InvalidValue for a clan that is not a node.
    std::size_t index_of(const Clan& clan) const;

    /// Graphviz rendering with nodes labelled by clan and dimension, edges by index.
    std::string to_dot() const;

private:
    int p_;
    int q_;
    std::vector<Clan> nodes_;
    std::vector<std::vector<Edge>> adjacency_;
};

/// Builds the graph; the supported envelope is p + q <= 10.
WeakOrderGraph weak_order_graph(int p, int q);

}  // namespace pqclan
