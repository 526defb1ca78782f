#include <nashkit/errors.hpp>
#include <nashkit/game_json.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nashkit {

using nlohmann::json;

namespace {

Rational entry_from_json(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(e.what());
    }
  }
  throw SchemaError("payoff entries must be integers or \"p/q\" strings");
}

}  // namespace

Game parse_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw SchemaError("game document must be an object");
  if (!doc.contains("format") || !doc["format"].is_array()) throw SchemaError("missing \"format\" array");
  if (!doc.contains("players") || !doc["players"].is_array()) throw SchemaError("missing \"players\" array");

  std::vector<int> d;
  for (const auto& v : doc["format"]) {
    if (!v.is_number_integer()) throw SchemaError("format entries must be integers");
    d.push_back(v.get<int>());
  }
  Format fmt;
  try {
    fmt = Format(std::move(d));
  } catch (const FormatError& e) {
    throw SchemaError(e.what());
  }

  const auto& players = doc["players"];
  if (static_cast<int>(players.size()) != fmt.n())
    throw SchemaError("expected " + std::to_string(fmt.n()) + " players, got " + std::to_string(players.size()));
  std::vector<PayoffTensor> tensors;
  for (const auto& p : players) {
    if (!p.is_object() || !p.contains("payoffs") || !p["payoffs"].is_array())
      throw SchemaError("each player needs a \"payoffs\" array");
    std::vector<Rational> coeffs;
    coeffs.reserve(fmt.cells());
    for (const auto& v : p["payoffs"]) coeffs.push_back(entry_from_json(v));
    tensors.emplace_back(fmt, std::move(coeffs));
  }
  return Game(fmt, std::move(tensors));
}

Game load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_game(ss.str());
}

std::string serialize_game(const Game& g) {
  json doc;
  doc["format"] = g.format().dims();
  json players = json::array();
  for (const auto& t : g.tensors()) {
    json payoffs = json::array();
    for (const auto& c : t.coeffs()) payoffs.push_back(to_string(c));
    players.push_back({{"payoffs", std::move(payoffs)}});
  }
  doc["players"] = std::move(players);
  return doc.dump() + "\n";
}

}  // namespace nashkit
