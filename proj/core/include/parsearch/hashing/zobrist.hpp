#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "parsearch/common.hpp"

namespace parsearch {

inline constexpr std::uint64_t kDefaultHashSeed = 42;

/// One 64-bit random string per feature id. Entry i is output i of a
/// splitmix64 stream started at `seed`, so tables are reproducible.
class ZobristTable {
 public:
  ZobristTable(std::size_t size, std::uint64_t seed = kDefaultHashSeed);

  std::uint64_t operator[](FeatureId f) const {
    if (f >= bits_.size())
      throw ConfigError("feature " + std::to_string(f) + " has no Zobrist entry (table size " +
                        std::to_string(bits_.size()) + ")");
    return bits_[f];
  }

  std::size_t size() const { return bits_.size(); }
  std::uint64_t seed() const { return seed_; }

 private:
  std::vector<std::uint64_t> bits_;
  std::uint64_t seed_;
};

std::uint64_t zobrist_key(const ZobristTable& table, std::span<const FeatureId> features);

/// Incremental form: xor out the removed features, xor in the added ones.
std::uint64_t zobrist_update(std::uint64_t key, std::span<const FeatureId> removed, std::span<const FeatureId> added,
                             const ZobristTable& table);

inline constexpr FeatureId kDroppedFeature = std::numeric_limits<FeatureId>::max();

/// Many-to-one map from raw feature ids to abstract feature ids. A raw
/// feature mapped to kDroppedFeature contributes nothing to the abstract key,
/// which is how abstractions that ignore part of the state are expressed.
class FeatureProjection {
 public:
  FeatureProjection(std::vector<FeatureId> map, std::size_t abstract_count);

  static FeatureProjection identity(std::size_t count);

  FeatureId operator()(FeatureId raw) const {
    if (raw >= map_.size()) throw ConfigError("feature " + std::to_string(raw) + " outside the projection domain");
    return map_[raw];
  }

  std::size_t domain_size() const { return map_.size(); }
  std::size_t abstract_count() const { return abstract_count_; }

 private:
  std::vector<FeatureId> map_;
  std::size_t abstract_count_;
};

/// xor of table[A(x)] over the state's features; dropped features are skipped.
std::uint64_t azh_key(const ZobristTable& abstract_table, const FeatureProjection& projection,
                      std::span<const FeatureId> features);

}  // namespace parsearch
