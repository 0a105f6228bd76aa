#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parsearch {

using Cost = double;
using FeatureId = std::uint32_t;
using WorkerId = std::uint32_t;

inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::infinity();

// Tolerance for every comparison between f/g values.
inline constexpr Cost kCostEpsilon = 1e-9;

inline bool cost_equal(Cost a, Cost b) {
  if (a == b) return true;
  return std::abs(a - b) <= kCostEpsilon;
}

template <class State>
struct Successor {
  State state;
  Cost cost;
};

/// Invalid strategy, projection, or problem configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A search stored more nodes than its configured limit.
class NodeLimitExceeded : public std::runtime_error {
 public:
  explicit NodeLimitExceeded(std::size_t limit)
      : std::runtime_error("node limit of " + std::to_string(limit) + " exceeded"), limit_(limit) {}

  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::size_t hash_bytes(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0x51ed270b27e1a3c5ULL ^ size;
  std::size_t i = 0;
  for (; i + 8 <= size; i += 8) {
    std::uint64_t word;
    std::memcpy(&word, bytes + i, 8);
    h = mix64(h ^ word);
  }
  std::uint64_t tail = 0;
  for (std::size_t shift = 0; i < size; ++i, shift += 8) tail |= std::uint64_t{bytes[i]} << shift;
  return static_cast<std::size_t>(mix64(h ^ tail));
}

}  // namespace parsearch
