#include "pqclan/weak_action.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pqclan/error.hpp"

namespace pqclan {

ActionCase classify_simple(int i, const Clan& clan) {
    if (i < 1 || i >= clan.size()) {
        throw IndexOutOfRange("simple root index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(clan.size() - 1));
    }
    const ClanSymbol left = clan[i];
    const ClanSymbol right = clan[i + 1];
    const bool case1 = left.is_sign() && right.is_number() && clan.mate(i + 1) > i + 1;
    const bool case2 = left.is_number() && right.is_sign() && clan.mate(i) < i;
    const bool case3 = left.is_number() && right.is_number() && left != right && clan.mate(i) < clan.mate(i + 1);
    const bool case4 = left.is_sign() && right.is_sign() && left != right;
    if (int(case1) + int(case2) + int(case3) + int(case4) > 1) {
        throw std::logic_error("overlapping action cases at index " + std::to_string(i) + " of " +
                               clan.to_tuple_string());
    }
    if (case1) return ActionCase::SignThenOpeningNumber;
    if (case2) return ActionCase::ClosingNumberThenSign;
    if (case3) return ActionCase::NumbersMatesInOrder;
    if (case4) return ActionCase::OppositeSigns;
    return ActionCase::Fixed;
}

Clan act_simple(int i, const Clan& clan) {
    const ActionCase kind = classify_simple(i, clan);
    if (kind == ActionCase::Fixed) return clan;
    std::vector<ClanSymbol> symbols(clan.symbols().begin(), clan.symbols().end());
    const auto a = static_cast<std::size_t>(i - 1);
    if (kind == ActionCase::OppositeSigns) {
        // fresh label beyond every existing one; the constructor renumbers
        const ClanSymbol fresh = ClanSymbol::number(clan.pair_count() + 1);
        symbols[a] = fresh;
        symbols[a + 1] = fresh;
    } else {
        std::swap(symbols[a], symbols[a + 1]);
    }
    return Clan(clan.p(), clan.q(), std::move(symbols));
}

Clan act_word(std::span<const int> word, const Clan& clan) {
    Clan result = clan;
    for (auto it = word.rbegin(); it != word.rend(); ++it) result = act_simple(*it, result);
    return result;
}

Clan act_permutation(const Permutation& w, const Clan& clan) {
    if (w.size() != clan.size()) {
        throw RankMismatch("permutation in S_" + std::to_string(w.size()) + " acting on a clan of length " +
                           std::to_string(clan.size()));
    }
    const Word word = canonical_reduced_word(w);
    return act_word(word, clan);
}

Clan cross_action(const Permutation& w, const Clan& clan) {
    if (w.size() != clan.size()) {
        throw RankMismatch("permutation in S_" + std::to_string(w.size()) + " acting on a clan of length " +
                           std::to_string(clan.size()));
    }
    const Permutation inv = w.inverse();
    std::vector<ClanSymbol> symbols;
    symbols.reserve(static_cast<std::size_t>(clan.size()));
    for (int i = 1; i <= clan.size(); ++i) symbols.push_back(clan[inv(i)]);
    return Clan(clan.p(), clan.q(), std::move(symbols));
}

std::vector<Clan> closed_clans(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) throw InvalidValue("need p, q >= 0 and p + q >= 1");
    std::vector<ClanSymbol> symbols(static_cast<std::size_t>(p), ClanSymbol::plus());
    symbols.insert(symbols.end(), static_cast<std::size_t>(q), ClanSymbol::minus());
    std::vector<Clan> out;
    do {
        out.emplace_back(p, q, symbols);
    } while (std::next_permutation(symbols.begin(), symbols.end()));
    return out;
}

Clan open_clan(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) throw InvalidValue("need p, q >= 0 and p + q >= 1");
    const int m = std::min(p, q);
    std::vector<ClanSymbol> symbols;
    for (int k = 1; k <= m; ++k) symbols.push_back(ClanSymbol::number(k));
    const ClanSymbol middle = p >= q ? ClanSymbol::plus() : ClanSymbol::minus();
    symbols.insert(symbols.end(), static_cast<std::size_t>(std::max(p, q) - m), middle);
    for (int k = m; k >= 1; --k) symbols.push_back(ClanSymbol::number(k));
    return Clan(p, q, std::move(symbols));
}

WeakOrderGraph::WeakOrderGraph(int p, int q) : p_(p), q_(q), nodes_(enumerate_clans(p, q)) {
    adjacency_.resize(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const Clan& source = nodes_[k];
        for (int i = 1; i < source.size(); ++i) {
            Clan target = act_simple(i, source);
            if (target != source) adjacency_[k].push_back({index_of(target), i});
        }
    }
}

std::size_t WeakOrderGraph::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& edges : adjacency_) total += edges.size();
    return total;
}

std::size_t WeakOrderGraph::index_of(const Clan& clan) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), clan);
    if (it == nodes_.end() || *it != clan) {
        throw InvalidValue("clan " + clan.to_tuple_string() + " is not a node of this graph");
    }
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::string WeakOrderGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph weak_order_" << p_ << "_" << q_ << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        os << "  n" << k << " [label=\"" << nodes_[k].to_tuple_string() << "\\ndim " << orbit_dimension(nodes_[k])
           << "\"];\n";
    }
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        for (const auto& e : adjacency_[k]) {
            os << "  n" << k << " -> n" << e.target << " [label=\"" << e.label << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

WeakOrderGraph weak_order_graph(int p, int q) {
    if (p + q > 10) throw PreconditionError("weak order graph is supported for p + q <= 10");
    return WeakOrderGraph(p, q);
}

}  // namespace pqclan
