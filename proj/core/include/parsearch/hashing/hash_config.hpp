#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "parsearch/hashing/owners.hpp"
#include "parsearch/hashing/zobrist.hpp"

namespace parsearch {

enum class HashKind { zobrist, azh, mult, abstraction, hyperplane, random, custom };

/// CLI tokens: zobrist | azh | mult | abstraction | hyperplane | random.
HashKind parse_hash_kind(std::string_view token);
std::string_view hash_kind_name(HashKind kind);

struct HashConfig {
  HashKind kind = HashKind::zobrist;
  std::uint64_t seed = kDefaultHashSeed;
  long double mult_a = kGoldenMultiplier;
  Thickness hyperplane_d = Thickness::whole(1);
  // Abstract Zobrist projections.
  int tile_azh_rows = 2;
  int grid_azh_block = 2;
  int lattice_azh_block = 2;
  // Abstraction-based owners.
  std::vector<int> abstraction_tiles{1, 2, 3};
  int grid_block = 4;
  int lattice_block = 2;
  int graph_block = 4;
};

/// Applies "key = value" lines on top of `base`. Keys: seed, mult_a,
/// hyperplane_d, tile_azh_rows, grid_azh_block, lattice_azh_block,
/// abstraction_tiles (comma list), grid_block, lattice_block, graph_block.
/// '#' starts a comment.
HashConfig parse_hash_config(std::string_view text, HashConfig base = {});

}  // namespace parsearch
