#pragma once

#include <nashkit/game.hpp>

#include <string>
#include <string_view>

namespace nashkit {

// {"format":[d1,...,dn],"players":[{"payoffs":[...]}, ...]}
// Entries are JSON integers or strings "p/q".
Game parse_game(std::string_view text);
Game load_game(const std::string& path);

// Canonical document: sorted keys, every payoff as a reduced rational string.
std::string serialize_game(const Game& g);

}  // namespace nashkit
