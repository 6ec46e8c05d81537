#include "pqclan/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "pqclan/error.hpp"

namespace pqclan {

namespace {

void require_same_rank(const Permutation& a, const Permutation& b, const char* what) {
    if (a.size() != b.size()) {
        throw RankMismatch(std::string(what) + ": permutations of rank " + std::to_string(a.size()) +
                           " and " + std::to_string(b.size()));
    }
}

bool is_separator(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',';
}

// Splits on whitespace and commas, dropping empty pieces.
std::vector<std::string_view> split_tokens(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_separator(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_separator(text[j])) ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_positive(std::string_view tok, std::string_view context) {
    if (tok.empty() || tok.size() > 6) {
        throw ParseError("invalid number '" + std::string(tok) + "' in " + std::string(context));
    }
    int value = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("invalid number '" + std::string(tok) + "' in " + std::string(context));
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

void collect_reduced_words(std::vector<int>& w, Word& suffix, std::vector<Word>& out) {
    bool any = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) {
            any = true;
            std::swap(w[i], w[i + 1]);
            suffix.push_back(static_cast<int>(i) + 1);
            collect_reduced_words(w, suffix, out);
            suffix.pop_back();
            std::swap(w[i], w[i + 1]);
        }
    }
    if (!any) out.emplace_back(suffix.rbegin(), suffix.rend());
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = size();
    if (n == 0) throw InvalidValue("permutation must have rank at least 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : image_) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
            throw InvalidValue("not a bijection of [" + std::to_string(n) + "]");
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::longest(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(img));
}

Permutation Permutation::simple(int i, int n) {
    if (i < 1 || i >= n) {
        throw IndexOutOfRange("simple reflection s_" + std::to_string(i) + " not in S_" + std::to_string(n));
    }
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
    return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text) {
    auto tokens = split_tokens(text);
    std::vector<int> img;
    if (tokens.size() == 1) {
        // single-string digit form
        for (char c : tokens.front()) {
            if (c < '1' || c > '9') {
                throw ParseError("invalid permutation '" + std::string(text) + "'");
            }
            img.push_back(c - '0');
        }
    } else {
        for (auto tok : tokens) img.push_back(parse_positive(tok, "permutation"));
    }
    if (img.empty()) throw ParseError("empty permutation");
    try {
        return Permutation(std::move(img));
    } catch (const InvalidValue& e) {
        throw ParseError("invalid permutation '" + std::string(text) + "': " + e.what());
    }
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > size()) {
        throw IndexOutOfRange("position " + std::to_string(i) + " out of range for S_" + std::to_string(size()));
    }
    return image_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
    std::string out;
    const bool compact = size() <= 9;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(image_[i]);
    }
    return out;
}

int length(const Permutation& w) {
    auto img = w.one_line();
    int inv = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
        for (std::size_t j = i + 1; j < img.size(); ++j) {
            if (img[i] > img[j]) ++inv;
        }
    }
    return inv;
}

RankMatrix::RankMatrix(const Permutation& w)
    : n_(w.size()), entries_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            const int above = i > 1 ? entries_[static_cast<std::size_t>((i - 2) * n_ + (j - 1))] : 0;
            entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))] = above + (w(i) <= j ? 1 : 0);
        }
    }
}

int RankMatrix::operator()(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw IndexOutOfRange("rank matrix index out of range");
    }
    return entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
}

Permutation RankMatrix::jumps() const {
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) {
        int jump = 0;
        for (int j = 1; j <= n_ && jump == 0; ++j) {
            const int above = i > 1 ? (*this)(i - 1, j) : 0;
            if ((*this)(i, j) == above + 1) jump = j;
        }
        img.push_back(jump);
    }
    return Permutation(std::move(img));
}

bool bruhat_leq_rank(const Permutation& u, const Permutation& v) {
    require_same_rank(u, v, "bruhat_leq_rank");
    const RankMatrix ru(u);
    const RankMatrix rv(v);
    const int n = u.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (ru(i, j) < rv(i, j)) return false;
        }
    }
    return true;
}

bool bruhat_leq_sorted(const Permutation& u, const Permutation& v) {
    require_same_rank(u, v, "bruhat_leq_sorted");
    auto a = u.one_line();
    auto b = v.one_line();
    std::vector<int> pu;
    std::vector<int> pv;
    for (std::size_t i = 0; i < a.size(); ++i) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), a[i]), a[i]);
        pv.insert(std::upper_bound(pv.begin(), pv.end(), b[i]), b[i]);
        for (std::size_t k = 0; k < pu.size(); ++k) {
            if (pu[k] > pv[k]) return false;
        }
    }
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    require_same_rank(a, b, "compose");
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(a.size()));
    for (int x : b.one_line()) img.push_back(a(x));
    return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 1) throw InvalidValue("rank must be positive");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<Permutation> enumerate_by_length(int n, int d) {
    std::vector<Permutation> out;
    for (auto& w : all_permutations(n)) {
        if (length(w) == d) out.push_back(std::move(w));
    }
    return out;
}

std::vector<Word> reduced_words(const Permutation& w) {
    std::vector<int> img(w.one_line().begin(), w.one_line().end());
    Word suffix;
    std::vector<Word> out;
    collect_reduced_words(img, suffix, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Word canonical_reduced_word(const Permutation& w) {
    std::vector<int> img(w.one_line().begin(), w.one_line().end());
    Word reversed;
    for (;;) {
        int descent = 0;
        for (std::size_t i = img.size(); i-- > 1;) {
            if (img[i - 1] > img[i]) {
                descent = static_cast<int>(i);
                break;
            }
        }
        if (descent == 0) break;
        std::swap(img[static_cast<std::size_t>(descent - 1)], img[static_cast<std::size_t>(descent)]);
        reversed.push_back(descent);
    }
    return Word(reversed.rbegin(), reversed.rend());
}

Permutation word_to_permutation(std::span<const int> word, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    // right-multiplying by s_i swaps positions i and i+1
    for (int i : word) {
        if (i < 1 || i >= n) {
            throw IndexOutOfRange("simple reflection s_" + std::to_string(i) + " not in S_" + std::to_string(n));
        }
        std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
    }
    return Permutation(std::move(img));
}

std::string format_word(std::span<const int> word) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k > 0) os << ", ";
        os << word[k];
    }
    os << ']';
    return os.str();
}

Word parse_word(std::string_view text) {
    std::string cleaned(text);
    for (char& c : cleaned) {
        if (c == '[' || c == ']') c = ' ';
    }
    Word word;
    for (auto tok : split_tokens(cleaned)) word.push_back(parse_positive(tok, "word"));
    return word;
}

}  // namespace pqclan
