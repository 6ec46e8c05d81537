#pragma once

#include <string>
#include <string_view>

#include "pqclan/clan.hpp"
#include "pqclan/structure_constants.hpp"

namespace pqclan {

/// {"p":2,"q":2,"symbols":["+","1","-","1"]}
std::string clan_to_json(const Clan& clan);
/// Throws ParseError on malformed JSON or an invalid clan.
Clan clan_from_json(std::string_view text);

/// {"u":"31425","v":"14253","p":3,"q":2,"clan":{...} or null,"terms":[{"w":"34251","coeff":1},...]}
///
/// A null clan marks an incomparable pair.
std::string expansion_to_json(const ProductExpansion& expansion);
ProductExpansion expansion_from_json(std::string_view text);

}  // namespace pqclan
