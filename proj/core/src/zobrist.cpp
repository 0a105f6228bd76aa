#include "parsearch/hashing/zobrist.hpp"

namespace parsearch {

ZobristTable::ZobristTable(std::size_t size, std::uint64_t seed) : bits_(size), seed_(seed) {
  for (std::size_t i = 0; i < size; ++i) bits_[i] = mix64(seed + 0x9e3779b97f4a7c15ULL * i);
}

std::uint64_t zobrist_key(const ZobristTable& table, std::span<const FeatureId> features) {
  std::uint64_t key = 0;
  for (FeatureId f : features) key ^= table[f];
  return key;
}

std::uint64_t zobrist_update(std::uint64_t key, std::span<const FeatureId> removed, std::span<const FeatureId> added,
                             const ZobristTable& table) {
  for (FeatureId f : removed) key ^= table[f];
  for (FeatureId f : added) key ^= table[f];
  return key;
}

FeatureProjection::FeatureProjection(std::vector<FeatureId> map, std::size_t abstract_count)
    : map_(std::move(map)), abstract_count_(abstract_count) {
  for (FeatureId a : map_)
    if (a != kDroppedFeature && a >= abstract_count_)
      throw ConfigError("projection target " + std::to_string(a) + " outside the abstract feature range");
}

FeatureProjection FeatureProjection::identity(std::size_t count) {
  std::vector<FeatureId> map(count);
  for (std::size_t i = 0; i < count; ++i) map[i] = static_cast<FeatureId>(i);
  return FeatureProjection(std::move(map), count);
}

std::uint64_t azh_key(const ZobristTable& abstract_table, const FeatureProjection& projection,
                      std::span<const FeatureId> features) {
  std::uint64_t key = 0;
  for (FeatureId f : features) {
    const FeatureId a = projection(f);
    if (a != kDroppedFeature) key ^= abstract_table[a];
  }
  return key;
}

}  // namespace parsearch
