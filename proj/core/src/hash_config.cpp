#include "parsearch/hashing/hash_config.hpp"

#include <sstream>

namespace parsearch {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

int positive_int(const std::string& value, std::size_t line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size() || v < 1) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a positive integer, got '" + value + "'");
  }
}

}  // namespace

HashKind parse_hash_kind(std::string_view token) {
  if (token == "zobrist") return HashKind::zobrist;
  if (token == "azh") return HashKind::azh;
  if (token == "mult") return HashKind::mult;
  if (token == "abstraction") return HashKind::abstraction;
  if (token == "hyperplane") return HashKind::hyperplane;
  if (token == "random") return HashKind::random;
  throw ConfigError("unknown hash strategy '" + std::string(token) +
                    "' (expected zobrist, azh, mult, abstraction, hyperplane or random)");
}

std::string_view hash_kind_name(HashKind kind) {
  switch (kind) {
    case HashKind::zobrist: return "zobrist";
    case HashKind::azh: return "azh";
    case HashKind::mult: return "mult";
    case HashKind::abstraction: return "abstraction";
    case HashKind::hyperplane: return "hyperplane";
    case HashKind::random: return "random";
    case HashKind::custom: return "custom";
  }
  return "unknown";
}

HashConfig parse_hash_config(std::string_view text, HashConfig base) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string content = trim(raw);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected \"key = value\"");
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    try {
      if (key == "seed") {
        base.seed = std::stoull(value);
      } else if (key == "mult_a") {
        base.mult_a = std::stold(value);
        if (!(base.mult_a >= 0.0L && base.mult_a < 1.0L)) throw ParseError(line, "mult_a must lie in [0, 1)");
      } else if (key == "hyperplane_d") {
        base.hyperplane_d = Thickness::parse(value);
      } else if (key == "tile_azh_rows") {
        base.tile_azh_rows = positive_int(value, line);
      } else if (key == "grid_azh_block") {
        base.grid_azh_block = positive_int(value, line);
      } else if (key == "lattice_azh_block") {
        base.lattice_azh_block = positive_int(value, line);
      } else if (key == "grid_block") {
        base.grid_block = positive_int(value, line);
      } else if (key == "lattice_block") {
        base.lattice_block = positive_int(value, line);
      } else if (key == "graph_block") {
        base.graph_block = positive_int(value, line);
      } else if (key == "abstraction_tiles") {
        base.abstraction_tiles.clear();
        std::istringstream items(value);
        for (std::string item; std::getline(items, item, ',');) base.abstraction_tiles.push_back(positive_int(trim(item), line));
        if (base.abstraction_tiles.empty()) throw ParseError(line, "abstraction_tiles needs at least one tile");
      } else {
        throw ParseError(line, "unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      throw ParseError(line, e.what());
    } catch (const std::invalid_argument&) {
      throw ParseError(line, "invalid value '" + value + "' for " + key);
    } catch (const std::out_of_range&) {
      throw ParseError(line, "value out of range for " + key);
    }
  }
  return base;
}

}  // namespace parsearch
