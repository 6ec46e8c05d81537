#include "pqclan/json_io.hpp"

#include <nlohmann/json.hpp>

#include "pqclan/error.hpp"

namespace pqclan {

namespace {

using json = nlohmann::ordered_json;

json clan_object(const Clan& clan) {
    json symbols = json::array();
    for (auto s : clan.symbols()) symbols.push_back(s.to_string());
    return json{{"p", clan.p()}, {"q", clan.q()}, {"symbols", std::move(symbols)}};
}

Clan clan_from_object(const json& obj) {
    std::string text;
    for (const auto& s : obj.at("symbols")) {
        text += s.get<std::string>();
        text += ' ';
    }
    return Clan::parse(text, obj.at("p").get<int>(), obj.at("q").get<int>());
}

template <typename Fn>
auto parse_json(std::string_view text, Fn&& build) {
    try {
        return build(json::parse(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string clan_to_json(const Clan& clan) { return clan_object(clan).dump(); }

Clan clan_from_json(std::string_view text) {
    return parse_json(text, [](const json& j) { return clan_from_object(j); });
}

std::string expansion_to_json(const ProductExpansion& expansion) {
    json terms = json::array();
    for (const auto& t : expansion.terms) terms.push_back(json{{"w", t.w.to_string()}, {"coeff", t.coefficient}});
    json out = {
        {"u", expansion.u.to_string()},
        {"v", expansion.v.to_string()},
        {"p", expansion.p},
        {"q", expansion.q},
        {"clan", expansion.clan ? clan_object(*expansion.clan) : json(nullptr)},
        {"terms", std::move(terms)},
    };
    return out.dump();
}

ProductExpansion expansion_from_json(std::string_view text) {
    return parse_json(text, [](const json& j) {
        ProductExpansion e{j.at("p").get<int>(),
                           j.at("q").get<int>(),
                           Permutation::parse(j.at("u").get<std::string>()),
                           Permutation::parse(j.at("v").get<std::string>()),
                           PairStatus::Incomparable,
                           std::nullopt,
                           {}};
        if (!j.at("clan").is_null()) {
            e.clan = clan_from_object(j.at("clan"));
            e.status = PairStatus::Comparable;
        }
        for (const auto& t : j.at("terms")) {
            e.terms.push_back({Permutation::parse(t.at("w").get<std::string>()), t.at("coeff").get<int>()});
        }
        return e;
    });
}

}  // namespace pqclan
