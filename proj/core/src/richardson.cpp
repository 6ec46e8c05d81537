#include "pqclan/richardson.hpp"

#include <algorithm>

#include "pqclan/error.hpp"

namespace pqclan {

namespace {

// True when the values <= threshold appear in increasing (or decreasing) order left to right,
// and likewise the values > threshold.
bool is_shuffle(const Permutation& w, int threshold, bool increasing) {
    int last_low = increasing ? 0 : w.size() + 1;
    int last_high = last_low;
    for (int x : w.one_line()) {
        int& last = x <= threshold ? last_low : last_high;
        if (increasing ? x < last : x > last) return false;
        last = x;
    }
    return true;
}

void require_rank(const Permutation& w, int n, const char* what) {
    if (w.size() != n) {
        throw RankMismatch(std::string(what) + ": expected a permutation in S_" + std::to_string(n) + ", got S_" +
                           std::to_string(w.size()));
    }
}

}  // namespace

GammaSets gamma_sets(const Clan& clan) {
    GammaSets sets;
    for (int i = 1; i <= clan.size(); ++i) {
        const auto s = clan[i];
        const bool first = clan.is_first_occurrence(i);
        const bool second = s.is_number() && !first;
        (s.is_plus() || second ? sets.plus : sets.minus).push_back(i);
        (s.is_plus() || first ? sets.tilde_plus : sets.tilde_minus).push_back(i);
    }
    return sets;
}

Permutation u_of_clan(const Clan& clan) {
    const auto sets = gamma_sets(clan);
    std::vector<int> img(static_cast<std::size_t>(clan.size()));
    int value = clan.p();
    for (int i : sets.plus) img[static_cast<std::size_t>(i - 1)] = value--;
    value = clan.size();
    for (int i : sets.minus) img[static_cast<std::size_t>(i - 1)] = value--;
    return Permutation(std::move(img));
}

Permutation v_of_clan(const Clan& clan) {
    const auto sets = gamma_sets(clan);
    std::vector<int> img(static_cast<std::size_t>(clan.size()));
    int value = 1;
    for (int i : sets.tilde_plus) img[static_cast<std::size_t>(i - 1)] = value++;
    for (int i : sets.tilde_minus) img[static_cast<std::size_t>(i - 1)] = value++;
    return Permutation(std::move(img));
}

bool is_pq_pair(const Permutation& u, const Permutation& v, int p, int q) {
    if (p < 0 || q < 0) throw InvalidValue("p and q must be non-negative");
    require_rank(u, p + q, "is_pq_pair");
    require_rank(v, p + q, "is_pq_pair");
    return is_shuffle(u, q, true) && is_shuffle(v, p, true);
}

std::vector<PqPair> enumerate_pq_pairs(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) throw InvalidValue("enumerate_pq_pairs needs p, q >= 0 and p + q >= 1");
    const int n = p + q;
    // one-line shuffles of 1..k with k+1..n, listed by the positions holding 1..k
    auto shuffles = [n](int k) {
        std::vector<Permutation> out;
        std::vector<int> low_first(static_cast<std::size_t>(n), 1);
        std::fill(low_first.begin() + k, low_first.end(), 0);
        do {
            std::vector<int> img(static_cast<std::size_t>(n));
            int low = 1;
            int high = k + 1;
            for (std::size_t i = 0; i < img.size(); ++i) img[i] = low_first[i] ? low++ : high++;
            out.emplace_back(std::move(img));
        } while (std::prev_permutation(low_first.begin(), low_first.end()));
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<PqPair> out;
    const auto us = shuffles(q);
    const auto vs = shuffles(p);
    for (const auto& u : us)
        for (const auto& v : vs) out.push_back({p, q, u, v});
    return out;
}

bool HighLowPattern::dominant() const noexcept {
    int balance = 0;
    for (auto t : tokens_) {
        if (t == HighLow::High) ++balance;
        if (t == HighLow::Low && --balance < 0) return false;
    }
    return true;
}

FsPattern HighLowPattern::to_fs_pattern() const {
    std::vector<FsToken> fs;
    fs.reserve(tokens_.size());
    for (auto t : tokens_) {
        switch (t) {
            case HighLow::Plus: fs.push_back(FsToken::Plus); break;
            case HighLow::Minus: fs.push_back(FsToken::Minus); break;
            case HighLow::High: fs.push_back(FsToken::First); break;
            case HighLow::Low: fs.push_back(FsToken::Second); break;
        }
    }
    return FsPattern(std::move(fs));
}

std::string HighLowPattern::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (i > 0) out += ',';
        switch (tokens_[i]) {
            case HighLow::Plus: out += '+'; break;
            case HighLow::Minus: out += '-'; break;
            case HighLow::High: out += 'H'; break;
            case HighLow::Low: out += 'L'; break;
        }
    }
    return out + ")";
}

HighLowPattern high_low_pattern(const Permutation& a, const Permutation& b, int p) {
    if (a.size() != b.size()) throw RankMismatch("high_low_pattern: permutations of different rank");
    if (p < 0 || p > a.size()) throw PreconditionError("high_low_pattern: p out of range");
    if (!is_shuffle(a, p, false)) {
        throw PreconditionError(a.to_string() + " is not a shuffle of p..1 and n..p+1 for p = " + std::to_string(p));
    }
    if (!is_shuffle(b, p, true)) {
        throw PreconditionError(b.to_string() + " is not a shuffle of 1..p and p+1..n for p = " + std::to_string(p));
    }
    std::vector<HighLow> tokens;
    for (int i = 1; i <= a.size(); ++i) {
        const bool a_low = a(i) <= p;
        const bool b_low = b(i) <= p;
        if (a_low && b_low) {
            tokens.push_back(HighLow::Plus);
        } else if (!a_low && !b_low) {
            tokens.push_back(HighLow::Minus);
        } else if (!a_low) {
            tokens.push_back(HighLow::High);
        } else {
            tokens.push_back(HighLow::Low);
        }
    }
    return HighLowPattern(std::move(tokens));
}

bool comparable(const Permutation& a, const Permutation& b, int p) {
    return high_low_pattern(a, b, p).dominant();
}

Permutation reverse_values(const Permutation& u) { return compose(Permutation::longest(u.size()), u); }

Clan clan_of_pair(const PqPair& pair) {
    if (!is_pq_pair(pair.u, pair.v, pair.p, pair.q)) {
        throw NotPqPair("(" + pair.u.to_string() + ", " + pair.v.to_string() + ") is not a (" +
                        std::to_string(pair.p) + "," + std::to_string(pair.q) + ")-pair");
    }
    const Permutation a = reverse_values(pair.u);
    const HighLowPattern pattern = high_low_pattern(a, pair.v, pair.p);
    if (!pattern.dominant()) {
        throw IncomparablePair("w0*u = " + a.to_string() + " and v = " + pair.v.to_string() +
                               " are not comparable in Bruhat order");
    }
    return avoiding_clan_from_fs(pattern.to_fs_pattern());
}

}  // namespace pqclan
