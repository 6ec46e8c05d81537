#include "pqclan_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "pqclan/pqclan.hpp"
#include "table1.hpp"

namespace pqclan::cli {

namespace {

struct Pq {
    int p = 0;
    int q = 0;
};

Pq parse_pq(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("--pq expects \"p,q\", got \"" + text + "\"");
    auto number = [&](std::string_view part) {
        int value = 0;
        std::size_t used = 0;
        try {
            value = std::stoi(std::string(part), &used);
        } catch (const std::exception&) {
            throw ParseError("--pq expects \"p,q\", got \"" + text + "\"");
        }
        if (used != part.size() || value < 0) throw ParseError("--pq expects \"p,q\", got \"" + text + "\"");
        return value;
    };
    const std::string_view all(text);
    Pq pq{number(all.substr(0, comma)), number(all.substr(comma + 1))};
    if (pq.p + pq.q < 1) throw ParseError("--pq needs p + q >= 1");
    return pq;
}

Permutation parse_in(const std::string& text, const Pq& pq, const char* name) {
    const Permutation w = Permutation::parse(text);
    if (w.size() != pq.p + pq.q) {
        throw ParseError(std::string(name) + " = " + text + " is not in S_" + std::to_string(pq.p + pq.q));
    }
    return w;
}

void print_expansion_text(std::ostream& out, const ProductExpansion& e) {
    out << "S_" << e.u.to_string() << " * S_" << e.v.to_string() << "  (p,q) = (" << e.p << "," << e.q << ")\n";
    if (!e.clan) {
        out << "incomparable: w0*u and v are not comparable, every structure constant is 0\n";
        return;
    }
    out << "clan " << e.clan->to_tuple_string() << "\n";
    for (const auto& t : e.terms) {
        out << t.coefficient << "  S_" << t.w.to_string() << "  " << format_word(canonical_reduced_word(t.w)) << "\n";
    }
    out << e.terms.size() << (e.terms.size() == 1 ? " term\n" : " terms\n");
}

int cmd_product(const Pq& pq, const std::string& u_text, const std::string& v_text, const std::string& format,
                std::ostream& out) {
    const Permutation u = parse_in(u_text, pq, "u");
    const Permutation v = parse_in(v_text, pq, "v");
    const auto e = expand_product(u, v, pq.p, pq.q, 0);
    if (format == "json") out << expansion_to_json(e) << "\n";
    else print_expansion_text(out, e);
    return Ok;
}

int cmd_clan_of_pair(const Pq& pq, const std::string& u_text, const std::string& v_text, const std::string& format,
                     std::ostream& out) {
    const Clan c = clan_of_pair({pq.p, pq.q, parse_in(u_text, pq, "u"), parse_in(v_text, pq, "v")});
    if (format == "json") out << clan_to_json(c) << "\n";
    else out << c.to_string() << "\n";
    return Ok;
}

int cmd_act(const Pq& pq, const std::string& word_text, const std::string& clan_text, const std::string& format,
            std::ostream& out) {
    const Word word = parse_word(word_text);
    const Clan c = Clan::parse(clan_text, pq.p, pq.q);
    for (int letter : word) {
        if (letter < 1 || letter >= c.size()) {
            throw ParseError("word letter " + std::to_string(letter) + " is not a simple reflection of S_" +
                             std::to_string(c.size()));
        }
    }
    const Clan image = act_word(word, c);
    if (format == "json") out << clan_to_json(image) << "\n";
    else out << image.to_string() << "\n";
    return Ok;
}

int cmd_clans(const Pq& pq, bool avoid, const std::string& format, std::ostream& out) {
    std::vector<Clan> clans = enumerate_clans(pq.p, pq.q);
    if (avoid) std::erase_if(clans, [](const Clan& c) { return !avoids_1212(c); });
    if (format == "json") {
        auto list = nlohmann::ordered_json::array();
        for (const auto& c : clans) list.push_back(nlohmann::ordered_json::parse(clan_to_json(c)));
        out << list.dump() << "\n";
    } else {
        for (const auto& c : clans) out << c.to_string() << "\n";
    }
    return Ok;
}

int cmd_weak_order(const Pq& pq, std::ostream& out) {
    out << weak_order_graph(pq.p, pq.q).to_dot();
    return Ok;
}

std::size_t verify_table1(std::ostream& out) {
    const Permutation u = Permutation::parse("31425");
    const Permutation v = Permutation::parse("14253");
    const Clan start = clan_of_pair({3, 2, u, v});
    out << "table1: S_31425 * S_14253, clan " << start.to_tuple_string() << "\n";
    std::size_t mismatches = 0;
    std::vector<Permutation> seen;
    for (const auto& row : table1_reference) {
        const Permutation w = word_to_permutation(parse_word(row.word), 5);
        seen.push_back(w);
        const std::string word = format_word(canonical_reduced_word(w));
        const std::string image = act_permutation(w, start).to_tuple_string();
        const int c = structure_constant(u, v, w, 3, 2).value;
        const bool ok = word == row.word && image == row.image && c == row.constant && length(w) == 6;
        mismatches += !ok;
        out << std::left << std::setw(20) << word << std::setw(14) << image << c << (ok ? "" : "  MISMATCH") << "\n";
    }
    std::sort(seen.begin(), seen.end());
    if (seen != enumerate_by_length(5, 6)) {
        ++mismatches;
        out << "table1: rows do not cover the length-6 elements of S_5\n";
    }
    out << "table1: " << table1_reference.size() << " rows, " << mismatches << " mismatches\n";
    return mismatches;
}

std::size_t verify_oracle(int n_max, std::ostream& out) {
    std::size_t total_mismatches = 0;
    for (int n = 1; n <= n_max; ++n) {
        std::size_t checked = 0;
        std::size_t comparable_pairs = 0;
        std::size_t mismatches = 0;
        std::size_t non_binary = 0;
        const auto start = std::chrono::steady_clock::now();
        for (int p = 0; p <= n; ++p) {
            for (const auto& pair : enumerate_pq_pairs(p, n - p)) {
                const auto e = expand_product(pair.u, pair.v, p, n - p);
                const auto oracle = oracle_expand(pair.u, pair.v, 0);
                std::vector<std::pair<Permutation, Polynomial::Coefficient>> mine;
                for (const auto& t : e.terms) mine.emplace_back(t.w, t.coefficient);
                ++checked;
                comparable_pairs += e.status == PairStatus::Comparable;
                for (const auto& term : oracle) non_binary += term.second != 1;
                if (mine != oracle) {
                    ++mismatches;
                    out << "mismatch: (p,q) = (" << p << "," << n - p << ") u = " << pair.u.to_string()
                        << " v = " << pair.v.to_string() << "\n";
                }
            }
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        out << "n = " << n << ": " << checked << " pairs (" << comparable_pairs << " comparable), " << mismatches
            << " mismatches, " << non_binary << " coefficients outside {0,1}, " << ms << " ms\n";
        total_mismatches += mismatches + non_binary;
    }
    out << total_mismatches << " mismatches\n";
    return total_mismatches;
}

int cmd_verify(int n_max, bool table1, std::ostream& out) {
    std::size_t mismatches = 0;
    if (table1) mismatches += verify_table1(out);
    if (n_max > 0) mismatches += verify_oracle(n_max, out);
    return mismatches == 0 ? Ok : VerifyMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schubert structure constants for (p,q)-pairs via clans", "pqclan"};
    app.require_subcommand(1);

    std::string pq_text;
    std::string u_text;
    std::string v_text;
    std::string format = "text";
    const auto text_or_json = CLI::IsMember({"text", "json"});

    auto* product = app.add_subcommand("product", "Expand S_u * S_v for a (p,q)-pair");
    product->add_option("--pq", pq_text, "p,q")->required();
    product->add_option("--u", u_text, "u in one-line notation")->required();
    product->add_option("--v", v_text, "v in one-line notation")->required();
    product->add_option("--format", format, "text or json")->check(text_or_json);

    auto* pair = app.add_subcommand("clan-of-pair", "The 1212-avoiding clan of a comparable (p,q)-pair");
    pair->add_option("--pq", pq_text, "p,q")->required();
    pair->add_option("--u", u_text, "u in one-line notation")->required();
    pair->add_option("--v", v_text, "v in one-line notation")->required();
    pair->add_option("--format", format, "text or json")->check(text_or_json);

    std::string word_text;
    std::string clan_text;
    auto* act = app.add_subcommand("act", "Apply a word in the simple reflections to a clan");
    act->add_option("--word", word_text, "e.g. \"2,1,3\" or \"[2, 1, 3]\"")->required();
    act->add_option("--clan", clan_text, "e.g. \"+ - + - +\"")->required();
    act->add_option("--pq", pq_text, "p,q")->required();
    act->add_option("--format", format, "text or json")->check(text_or_json);

    bool avoid = false;
    auto* clans = app.add_subcommand("clans", "List all (p,q)-clans");
    clans->add_option("--pq", pq_text, "p,q")->required();
    clans->add_flag("--avoid-1212", avoid, "only clans avoiding the pattern 1212");
    clans->add_option("--format", format, "text or json")->check(text_or_json);

    auto* weak = app.add_subcommand("weak-order", "Weak order graph on (p,q)-clans in DOT");
    weak->add_option("--pq", pq_text, "p,q")->required();

    int n_max = 0;
    bool table1 = false;
    auto* verify = app.add_subcommand("verify", "Check the clan rule against the Schubert polynomial oracle");
    verify->add_option("--n-max", n_max, "check every (p,q)-pair with p + q <= N")->check(CLI::Range(0, 6));
    verify->add_flag("--table1", table1, "reproduce the 20-row table for S_31425 * S_14253");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ParseFailure;
    }

    try {
        if (product->parsed()) return cmd_product(parse_pq(pq_text), u_text, v_text, format, out);
        if (pair->parsed()) return cmd_clan_of_pair(parse_pq(pq_text), u_text, v_text, format, out);
        if (act->parsed()) return cmd_act(parse_pq(pq_text), word_text, clan_text, format, out);
        if (clans->parsed()) return cmd_clans(parse_pq(pq_text), avoid, format, out);
        if (weak->parsed()) return cmd_weak_order(parse_pq(pq_text), out);
        if (verify->parsed()) {
            if (n_max == 0 && !table1) n_max = 4;
            return cmd_verify(n_max, table1, out);
        }
    } catch (const NotPqPair& e) {
        err << "error: not a (p,q)-pair: " << e.what() << "\n";
        return NotPqPairExit;
    } catch (const IncomparablePair& e) {
        err << "error: incomparable pair: " << e.what() << "\n";
        return IncomparableExit;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ParseFailure;
    }
    return ParseFailure;
}

}  // namespace pqclan::cli
