#include "parsearch/hashing/owners.hpp"

#include <charconv>
#include <cmath>
#include <cstring>

namespace parsearch {

std::uint64_t fold_key(std::string_view bytes) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < bytes.size(); i += 8) {
    std::uint64_t word = 0;
    const std::size_t n = std::min<std::size_t>(8, bytes.size() - i);
    for (std::size_t b = 0; b < n; ++b) word |= std::uint64_t{static_cast<unsigned char>(bytes[i + b])} << (8 * b);
    key ^= word;
  }
  return key;
}

WorkerId mult_owner(std::uint64_t kappa, std::uint32_t workers, long double a) {
  if (workers == 0) throw ConfigError("worker count must be positive");
  if (!(a >= 0.0L && a < 1.0L)) throw ConfigError("multiplicative hash constant must lie in [0, 1)");
  const auto reduced = static_cast<long double>(kappa & ((std::uint64_t{1} << 53) - 1));
  const long double product = reduced * a;
  const long double frac = product - std::floor(product);
  const auto owner = static_cast<std::uint64_t>(std::floor(static_cast<long double>(workers) * frac));
  return static_cast<WorkerId>(std::min<std::uint64_t>(owner, workers - 1));
}

Thickness Thickness::whole(std::uint32_t d) {
  if (d < 1) throw ConfigError("hyperplane thickness must be >= 1 or of the form 1/m");
  return Thickness(true, d);
}

Thickness Thickness::reciprocal(std::uint32_t m) {
  if (m < 2) throw ConfigError("reciprocal hyperplane thickness 1/m needs m >= 2");
  return Thickness(false, m);
}

Thickness Thickness::parse(std::string_view text) {
  auto parse_uint = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw ConfigError("invalid hyperplane thickness '" + std::string(text) + "'");
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (parse_uint(text.substr(0, slash)) != 1)
      throw ConfigError("fractional hyperplane thickness must be 1/m, got '" + std::string(text) + "'");
    return reciprocal(parse_uint(text.substr(slash + 1)));
  }
  return whole(parse_uint(text));
}

std::string Thickness::str() const { return whole_ ? std::to_string(value_) : "1/" + std::to_string(value_); }

std::uint64_t hyperplane_plane(std::uint64_t coordinate_sum, Thickness d, std::uint64_t zobrist) {
  if (d.is_whole()) return coordinate_sum / d.value();
  return d.value() * coordinate_sum + zobrist % d.value();
}

WorkerId hyperplane_owner(std::uint64_t coordinate_sum, Thickness d, std::uint32_t workers, std::uint64_t zobrist) {
  if (workers == 0) throw ConfigError("worker count must be positive");
  if (!d.is_whole() && d.value() > workers)
    throw ConfigError("hyperplane thickness " + d.str() + " needs at least " + std::to_string(d.value()) + " workers");
  return static_cast<WorkerId>(hyperplane_plane(coordinate_sum, d, zobrist) % workers);
}

}  // namespace parsearch
