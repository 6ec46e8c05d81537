#include "pqclan/clan.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "pqclan/error.hpp"

namespace pqclan {

namespace {

std::vector<std::string> split_symbol_tokens(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN, as copied from typeset tables
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            cleaned += " - ";
            i += 2;
            continue;
        }
        const char c = text[i];
        if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            cleaned += ' ';
        } else if (c == '+' || c == '-') {
            cleaned += ' ';
            cleaned += c;
            cleaned += ' ';
        } else {
            cleaned += c;
        }
    }
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < cleaned.size()) {
        while (i < cleaned.size() && cleaned[i] == ' ') ++i;
        std::size_t j = i;
        while (j < cleaned.size() && cleaned[j] != ' ') ++j;
        if (j > i) out.emplace_back(cleaned.substr(i, j - i));
        i = j;
    }
    return out;
}

struct PairSpan {
    int first;   // 0-based
    int second;  // 0-based
};

// Pairs ordered by their first position.
std::vector<PairSpan> pair_spans(const Clan& clan) {
    std::vector<PairSpan> spans;
    for (int i = 1; i <= clan.size(); ++i) {
        if (clan[i].is_number() && clan.is_first_occurrence(i)) {
            spans.push_back({i - 1, clan.mate(i) - 1});
        }
    }
    return spans;
}

bool interleaved(const PairSpan& a, const PairSpan& b) {
    return a.first < b.first && b.first < a.second && a.second < b.second;
}

// Depth-first generation of clans over a fixed slot template. `allowed(pos)` returns which
// tokens may be placed; the generator keeps the open numbers as a stack-ordered list.
class ClanGenerator {
public:
    ClanGenerator(int p, int q, int n) : p_(p), q_(q), n_(n) {}

    template <typename Allowed>
    std::vector<Clan> run(Allowed allowed) {
        current_.assign(static_cast<std::size_t>(n_), ClanSymbol::plus());
        out_.clear();
        open_.clear();
        recurse(0, 0, 0, 0, allowed);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    template <typename Allowed>
    void recurse(int pos, int plus, int minus, int pairs, Allowed& allowed) {
        const int open = static_cast<int>(open_.size());
        if (plus + pairs + open > p_ || minus + pairs + open > q_) return;
        if (pos == n_) {
            if (open == 0 && plus + pairs == p_ && minus + pairs == q_) {
                out_.emplace_back(p_, q_, current_);
            }
            return;
        }
        if (n_ - pos < open) return;
        const auto slot = static_cast<std::size_t>(pos);
        if (allowed(pos, FsToken::Plus)) {
            current_[slot] = ClanSymbol::plus();
            recurse(pos + 1, plus + 1, minus, pairs, allowed);
        }
        if (allowed(pos, FsToken::Minus)) {
            current_[slot] = ClanSymbol::minus();
            recurse(pos + 1, plus, minus + 1, pairs, allowed);
        }
        if (allowed(pos, FsToken::Second)) {
            for (std::size_t k = 0; k < open_.size(); ++k) {
                const int label = open_[k];
                current_[slot] = ClanSymbol::number(label);
                open_.erase(open_.begin() + static_cast<std::ptrdiff_t>(k));
                recurse(pos + 1, plus, minus, pairs + 1, allowed);
                open_.insert(open_.begin() + static_cast<std::ptrdiff_t>(k), label);
            }
        }
        if (allowed(pos, FsToken::First)) {
            const int label = ++next_label_;
            current_[slot] = ClanSymbol::number(label);
            open_.push_back(label);
            recurse(pos + 1, plus, minus, pairs, allowed);
            open_.pop_back();
            --next_label_;
        }
    }

    int p_;
    int q_;
    int n_;
    int next_label_ = 0;
    std::vector<ClanSymbol> current_;
    std::vector<int> open_;
    std::vector<Clan> out_;
};

char fs_char(FsToken t) {
    switch (t) {
        case FsToken::Plus: return '+';
        case FsToken::Minus: return '-';
        case FsToken::First: return 'F';
        case FsToken::Second: return 'S';
    }
    return '?';
}

}  // namespace

ClanSymbol ClanSymbol::number(int k) {
    if (k < 1) throw InvalidValue("clan numbers must be positive, got " + std::to_string(k));
    return ClanSymbol(k);
}

std::string ClanSymbol::to_string() const {
    if (is_plus()) return "+";
    if (is_minus()) return "-";
    return std::to_string(code_);
}

Clan::Clan(int p, int q, std::vector<ClanSymbol> symbols) : p_(p), q_(q), symbols_(std::move(symbols)) {
    if (p < 0 || q < 0 || p + q < 1) throw InvalidValue("need p, q >= 0 and p + q >= 1");
    if (size() != p + q) {
        throw InvalidValue("clan has " + std::to_string(size()) + " symbols but p + q = " + std::to_string(p + q));
    }
    std::map<int, int> relabel;
    std::map<int, int> first_seen;
    mates_.assign(symbols_.size(), -1);
    int plus = 0;
    int minus = 0;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const ClanSymbol s = symbols_[i];
        if (s.is_plus()) {
            ++plus;
            continue;
        }
        if (s.is_minus()) {
            ++minus;
            continue;
        }
        auto [it, inserted] = relabel.try_emplace(s.value(), static_cast<int>(relabel.size()) + 1);
        if (inserted) {
            first_seen[s.value()] = static_cast<int>(i);
        } else {
            auto f = first_seen.find(s.value());
            if (f == first_seen.end()) {
                throw InvalidValue("number " + std::to_string(s.value()) + " occurs more than twice");
            }
            mates_[i] = f->second;
            mates_[static_cast<std::size_t>(f->second)] = static_cast<int>(i);
            first_seen.erase(f);
        }
        symbols_[i] = ClanSymbol::number(it->second);
    }
    if (!first_seen.empty()) {
        throw InvalidValue("number " + std::to_string(first_seen.begin()->first) + " is unmatched");
    }
    if (plus - minus != p - q) {
        throw InvalidValue("#plus - #minus = " + std::to_string(plus - minus) + " but p - q = " +
                           std::to_string(p - q));
    }
}

Clan Clan::parse(std::string_view text, int p, int q) {
    std::vector<ClanSymbol> symbols;
    for (const auto& tok : split_symbol_tokens(text)) {
        if (tok == "+") {
            symbols.push_back(ClanSymbol::plus());
        } else if (tok == "-") {
            symbols.push_back(ClanSymbol::minus());
        } else {
            if (tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                })) {
                throw ParseError("malformed clan token '" + tok + "'");
            }
            const int k = std::stoi(tok);
            if (k < 1) throw ParseError("clan numbers must be positive: '" + tok + "'");
            symbols.push_back(ClanSymbol::number(k));
        }
    }
    try {
        return Clan(p, q, std::move(symbols));
    } catch (const InvalidValue& e) {
        throw ParseError("invalid (" + std::to_string(p) + "," + std::to_string(q) + ")-clan '" +
                         std::string(text) + "': " + e.what());
    }
}

ClanSymbol Clan::operator[](int i) const {
    if (i < 1 || i > size()) {
        throw IndexOutOfRange("clan position " + std::to_string(i) + " out of range 1.." + std::to_string(size()));
    }
    return symbols_[static_cast<std::size_t>(i - 1)];
}

int Clan::mate(int i) const {
    if (!(*this)[i].is_number()) throw PreconditionError("position " + std::to_string(i) + " holds a sign");
    return mates_[static_cast<std::size_t>(i - 1)] + 1;
}

bool Clan::is_first_occurrence(int i) const {
    return (*this)[i].is_number() && mates_[static_cast<std::size_t>(i - 1)] > i - 1;
}

int Clan::pair_count() const noexcept {
    int m = 0;
    for (auto s : symbols_) m = std::max(m, s.is_number() ? s.value() : 0);
    return m;
}

std::string Clan::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i > 0) out += ' ';
        out += symbols_[i].to_string();
    }
    return out;
}

std::string Clan::to_tuple_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i > 0) out += ',';
        out += symbols_[i].to_string();
    }
    return out + ")";
}

FsPattern::FsPattern(std::vector<FsToken> tokens) : tokens_(std::move(tokens)) {
    int balance = 0;
    for (auto t : tokens_) {
        if (t == FsToken::First) ++balance;
        if (t == FsToken::Second && --balance < 0) {
            throw InvalidValue("FS-pattern has an S with no open F before it");
        }
    }
    if (balance != 0) throw InvalidValue("FS-pattern has unequal numbers of F and S");
    if (tokens_.empty()) throw InvalidValue("empty FS-pattern");
}

FsPattern FsPattern::parse(std::string_view text) {
    std::vector<FsToken> tokens;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            tokens.push_back(FsToken::Minus);
            i += 2;
            continue;
        }
        const char c = text[i];
        switch (c) {
            case '+': tokens.push_back(FsToken::Plus); break;
            case '-': tokens.push_back(FsToken::Minus); break;
            case 'F': case 'f': tokens.push_back(FsToken::First); break;
            case 'S': case 's': tokens.push_back(FsToken::Second); break;
            default:
                if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) break;
                throw ParseError(std::string("malformed FS-pattern character '") + c + "'");
        }
    }
    try {
        return FsPattern(std::move(tokens));
    } catch (const InvalidValue& e) {
        throw ParseError("invalid FS-pattern '" + std::string(text) + "': " + e.what());
    }
}

int FsPattern::plus_count() const noexcept {
    return static_cast<int>(std::count(tokens_.begin(), tokens_.end(), FsToken::Plus));
}

int FsPattern::minus_count() const noexcept {
    return static_cast<int>(std::count(tokens_.begin(), tokens_.end(), FsToken::Minus));
}

int FsPattern::pair_count() const noexcept {
    return static_cast<int>(std::count(tokens_.begin(), tokens_.end(), FsToken::First));
}

std::string FsPattern::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (i > 0) out += ',';
        out += fs_char(tokens_[i]);
    }
    return out + ")";
}

int gamma_plus(const Clan& clan, int i) {
    if (i < 1 || i > clan.size()) throw IndexOutOfRange("gamma_plus index " + std::to_string(i));
    int count = 0;
    for (int k = 1; k <= i; ++k) {
        const auto s = clan[k];
        if (s.is_plus() || (s.is_number() && !clan.is_first_occurrence(k))) ++count;
    }
    return count;
}

int gamma_minus(const Clan& clan, int i) {
    if (i < 1 || i > clan.size()) throw IndexOutOfRange("gamma_minus index " + std::to_string(i));
    int count = 0;
    for (int k = 1; k <= i; ++k) {
        const auto s = clan[k];
        if (s.is_minus() || (s.is_number() && !clan.is_first_occurrence(k))) ++count;
    }
    return count;
}

int gamma_pair(const Clan& clan, int i, int j) {
    if (i < 1 || j > clan.size() || i >= j) {
        throw IndexOutOfRange("gamma_pair needs 1 <= i < j <= n, got (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }
    int count = 0;
    for (const auto& span : pair_spans(clan)) {
        if (span.first + 1 <= i && j < span.second + 1) ++count;
    }
    return count;
}

int clan_length(const Clan& clan) {
    const auto spans = pair_spans(clan);
    int total = 0;
    for (const auto& outer : spans) {
        int term = outer.second - outer.first;
        for (const auto& other : spans) {
            if (other.first < outer.first && outer.first < other.second && other.second < outer.second) --term;
        }
        total += term;
    }
    return total;
}

int orbit_dimension(const Clan& clan) {
    const int p = clan.p();
    const int q = clan.q();
    return (p * (p - 1) + q * (q - 1)) / 2 + clan_length(clan);
}

FsPattern fs_pattern(const Clan& clan) {
    std::vector<FsToken> tokens;
    tokens.reserve(static_cast<std::size_t>(clan.size()));
    for (int i = 1; i <= clan.size(); ++i) {
        const auto s = clan[i];
        if (s.is_plus()) {
            tokens.push_back(FsToken::Plus);
        } else if (s.is_minus()) {
            tokens.push_back(FsToken::Minus);
        } else {
            tokens.push_back(clan.is_first_occurrence(i) ? FsToken::First : FsToken::Second);
        }
    }
    return FsPattern(std::move(tokens));
}

int count_1212(const Clan& clan) {
    const auto spans = pair_spans(clan);
    int count = 0;
    for (std::size_t a = 0; a < spans.size(); ++a) {
        for (std::size_t b = a + 1; b < spans.size(); ++b) {
            if (interleaved(spans[a], spans[b])) ++count;
        }
    }
    return count;
}

bool avoids_1212(const Clan& clan) {
    const auto spans = pair_spans(clan);
    for (std::size_t a = 0; a < spans.size(); ++a) {
        for (std::size_t b = a + 1; b < spans.size(); ++b) {
            if (interleaved(spans[a], spans[b])) return false;
        }
    }
    return true;
}

Clan avoiding_clan_from_fs(const FsPattern& pattern) {
    std::vector<ClanSymbol> symbols;
    std::vector<int> open;
    int next = 0;
    for (auto t : pattern.tokens()) {
        switch (t) {
            case FsToken::Plus: symbols.push_back(ClanSymbol::plus()); break;
            case FsToken::Minus: symbols.push_back(ClanSymbol::minus()); break;
            case FsToken::First:
                open.push_back(++next);
                symbols.push_back(ClanSymbol::number(next));
                break;
            case FsToken::Second:
                symbols.push_back(ClanSymbol::number(open.back()));
                open.pop_back();
                break;
        }
    }
    const int m = pattern.pair_count();
    return Clan(pattern.plus_count() + m, pattern.minus_count() + m, std::move(symbols));
}

std::vector<Clan> clans_with_fs(const FsPattern& pattern) {
    const int m = pattern.pair_count();
    ClanGenerator gen(pattern.plus_count() + m, pattern.minus_count() + m, pattern.size());
    const auto tokens = pattern.tokens();
    return gen.run([&](int pos, FsToken t) { return tokens[static_cast<std::size_t>(pos)] == t; });
}

std::vector<Clan> enumerate_clans(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) throw InvalidValue("need p, q >= 0 and p + q >= 1");
    ClanGenerator gen(p, q, p + q);
    return gen.run([](int, FsToken) { return true; });
}

Clan remove_1212_step(const Clan& clan) {
    const auto spans = pair_spans(clan);
    for (std::size_t a = 0; a < spans.size(); ++a) {
        for (std::size_t b = a + 1; b < spans.size(); ++b) {
            if (interleaved(spans[a], spans[b])) {
                std::vector<ClanSymbol> symbols(clan.symbols().begin(), clan.symbols().end());
                std::swap(symbols[static_cast<std::size_t>(spans[a].second)],
                          symbols[static_cast<std::size_t>(spans[b].second)]);
                return Clan(clan.p(), clan.q(), std::move(symbols));
            }
        }
    }
    throw PreconditionError("clan " + clan.to_tuple_string() + " already avoids (1,2,1,2)");
}

Clan remove_1212_step(const Clan& clan, int a, int b) {
    const auto spans = pair_spans(clan);
    const int m = static_cast<int>(spans.size());
    if (a < 1 || a > m || b < 1 || b > m) {
        throw IndexOutOfRange("clan has no number " + std::to_string(a < 1 || a > m ? a : b));
    }
    // canonical numbering: label k is the k-th pair by first position
    PairSpan first = spans[static_cast<std::size_t>(a - 1)];
    PairSpan second = spans[static_cast<std::size_t>(b - 1)];
    if (second.first < first.first) std::swap(first, second);
    if (!interleaved(first, second)) {
        throw PreconditionError("numbers " + std::to_string(a) + " and " + std::to_string(b) +
                                " do not form a (1,2,1,2) occurrence in " + clan.to_tuple_string());
    }
    std::vector<ClanSymbol> symbols(clan.symbols().begin(), clan.symbols().end());
    std::swap(symbols[static_cast<std::size_t>(first.second)], symbols[static_cast<std::size_t>(second.second)]);
    return Clan(clan.p(), clan.q(), std::move(symbols));
}

}  // namespace pqclan
