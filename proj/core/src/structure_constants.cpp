#include "pqclan/structure_constants.hpp"

#include "pqclan/error.hpp"
#include "parallel.hpp"
#include "pqclan/richardson.hpp"
#include "pqclan/weak_action.hpp"

namespace pqclan {

namespace {

std::optional<Clan> clan_or_incomparable(const PqPair& pair) {
    try {
        return clan_of_pair(pair);
    } catch (const IncomparablePair&) {
        return std::nullopt;
    }
}

}  // namespace

StructureConstant structure_constant(const Permutation& u, const Permutation& v, const Permutation& w, int p,
                                     int q) {
    if (w.size() != u.size()) throw RankMismatch("structure_constant: w has a different rank");
    const auto clan = clan_or_incomparable(PqPair{p, q, u, v});
    if (!clan) return {0, PairStatus::Incomparable};
    if (length(w) != length(u) + length(v)) return {0, PairStatus::Comparable};
    return {act_permutation(w, *clan) == open_clan(p, q) ? 1 : 0, PairStatus::Comparable};
}

ProductExpansion expand_product(const Permutation& u, const Permutation& v, int p, int q, unsigned threads) {
    ProductExpansion result{p, q, u, v, PairStatus::Incomparable, std::nullopt, {}};
    result.clan = clan_or_incomparable(PqPair{p, q, u, v});
    if (!result.clan) return result;
    result.status = PairStatus::Comparable;

    const Clan target = open_clan(p, q);
    const auto candidates = enumerate_by_length(u.size(), length(u) + length(v));
    const Clan& start = *result.clan;
    const auto hits = parallel_map(candidates.size(), threads, [&](std::size_t k) {
        return act_permutation(candidates[k], start) == target;
    });
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (hits[k]) result.terms.push_back({candidates[k], 1});
    }
    return result;
}

int orbit_codimension(const Clan& clan) {
    const int n = clan.size();
    return n * (n - 1) / 2 - orbit_dimension(clan);
}

std::vector<Permutation> brion_set(const Clan& clan) {
    const Clan target = open_clan(clan.p(), clan.q());
    std::vector<Permutation> out;
    for (auto& w : enumerate_by_length(clan.size(), orbit_codimension(clan))) {
        if (act_permutation(w, clan) == target) out.push_back(std::move(w));
    }
    return out;
}

}  // namespace pqclan
