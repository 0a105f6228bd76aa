#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "parsearch/common.hpp"

namespace parsearch {

// (sqrt(5) - 1) / 2
inline constexpr long double kGoldenMultiplier = 0.618033988749894848204586834365638118L;

/// xor of the little-endian 8-byte words of `bytes`; a short last word is
/// zero-padded.
std::uint64_t fold_key(std::string_view bytes);

/// floor(p * frac(kappa * a)). kappa is reduced mod 2^53 and the product is
/// formed in long double.
WorkerId mult_owner(std::uint64_t kappa, std::uint32_t workers, long double a = kGoldenMultiplier);

/// Hyperplane thickness: either a whole number d >= 1 or a reciprocal 1/m
/// with m >= 2.
class Thickness {
 public:
  static Thickness whole(std::uint32_t d);
  static Thickness reciprocal(std::uint32_t m);
  /// Accepts "3" or "1/3".
  static Thickness parse(std::string_view text);

  bool is_whole() const { return whole_; }
  std::uint32_t value() const { return value_; }
  double as_double() const { return whole_ ? value_ : 1.0 / value_; }
  std::string str() const;

  friend bool operator==(const Thickness&, const Thickness&) = default;

 private:
  Thickness(bool whole, std::uint32_t value) : whole_(whole), value_(value) {}

  bool whole_;
  std::uint32_t value_;
};

/// Whole d: floor(sum / d). Reciprocal d = 1/m: m * sum + (zobrist mod m).
std::uint64_t hyperplane_plane(std::uint64_t coordinate_sum, Thickness d, std::uint64_t zobrist);

/// plane mod p. A reciprocal thickness 1/m needs m <= p.
WorkerId hyperplane_owner(std::uint64_t coordinate_sum, Thickness d, std::uint32_t workers, std::uint64_t zobrist);

inline WorkerId random_owner(std::mt19937_64& rng, std::uint32_t workers) {
  return std::uniform_int_distribution<std::uint32_t>(0, workers - 1)(rng);
}

}  // namespace parsearch
