#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "parsearch/hashing/hash_config.hpp"
#include "parsearch/hashing/owners.hpp"
#include "parsearch/hashing/projections.hpp"
#include "parsearch/hashing/zobrist.hpp"
#include "parsearch/problem.hpp"

namespace parsearch {

// Maps states to owner workers. Every strategy except `random` is a pure
// function of (state, worker count, configuration); the owner is key mod p
// except for the multiplicative, hyperplane and random strategies, which
// define the owner directly.
template <SearchProblem P>
class WorkDistribution {
 public:
  using State = StateOf<P>;
  using KeyFn = std::function<std::uint64_t(const State&)>;

  WorkDistribution(const P& problem, HashConfig config) : problem_(problem), config_(std::move(config)) {
    switch (config_.kind) {
      case HashKind::zobrist:
      case HashKind::random:
        table_ = std::make_shared<ZobristTable>(problem_.feature_count(), config_.seed);
        break;
      case HashKind::azh:
      case HashKind::abstraction: {
        auto projection = config_.kind == HashKind::azh ? azh_projection(problem_, config_)
                                                        : abstraction_projection(problem_, config_);
        table_ = std::make_shared<ZobristTable>(projection.abstract_count(), config_.seed);
        projection_ = std::make_shared<FeatureProjection>(std::move(projection));
        break;
      }
      case HashKind::hyperplane:
        if constexpr (!LatticeShaped<P>) {
          throw ConfigError("hyperplane work distribution needs a lattice domain");
        } else {
          table_ = std::make_shared<ZobristTable>(problem_.feature_count(), config_.seed);
        }
        break;
      case HashKind::mult:
        if (!(config_.mult_a >= 0.0L && config_.mult_a < 1.0L))
          throw ConfigError("multiplicative hash constant must lie in [0, 1)");
        break;
      case HashKind::custom:
        throw ConfigError("custom distributions are built with WorkDistribution::custom");
    }
  }

  /// Owner = key(state) mod p for a caller-supplied key.
  static WorkDistribution custom(const P& problem, KeyFn key) {
    WorkDistribution d(problem);
    d.config_.kind = HashKind::custom;
    d.custom_ = std::move(key);
    return d;
  }

  HashKind kind() const { return config_.kind; }
  const HashConfig& config() const { return config_; }
  bool deterministic() const { return config_.kind != HashKind::random; }

  /// 64-bit key: Zobrist (zobrist, random, hyperplane), abstract Zobrist
  /// (azh, abstraction), the folded canonical bytes (mult), or the custom key.
  std::uint64_t key(const State& s) const {
    switch (config_.kind) {
      case HashKind::mult: return fold_key(canonical_bytes(problem_, s));
      case HashKind::custom: return custom_(s);
      case HashKind::azh:
      case HashKind::abstraction: return azh_key(*table_, *projection_, features_of(s));
      default: return zobrist_key(*table_, features_of(s));
    }
  }

  /// `rng` is consulted only by the random strategy.
  WorkerId owner(const State& s, std::uint32_t workers, std::mt19937_64& rng) const {
    if (workers == 0) throw ConfigError("worker count must be positive");
    switch (config_.kind) {
      case HashKind::random: return random_owner(rng, workers);
      case HashKind::mult: return mult_owner(key(s), workers, config_.mult_a);
      case HashKind::hyperplane:
        if constexpr (LatticeShaped<P>) {
          return hyperplane_owner(problem_.coordinate_sum(s), config_.hyperplane_d, workers, key(s));
        } else {
          throw ConfigError("hyperplane work distribution needs a lattice domain");
        }
      default: return static_cast<WorkerId>(key(s) % workers);
    }
  }

  /// Owner of a pure strategy; throws for the random strategy.
  WorkerId owner(const State& s, std::uint32_t workers) const {
    if (!deterministic()) throw ConfigError("the random strategy has no fixed owner");
    std::mt19937_64 unused;
    return owner(s, workers, unused);
  }

 private:
  explicit WorkDistribution(const P& problem) : problem_(problem) {}

  const std::vector<FeatureId>& features_of(const State& s) const {
    thread_local std::vector<FeatureId> scratch;
    scratch.clear();
    problem_.features(s, scratch);
    return scratch;
  }

  P problem_;
  HashConfig config_;
  std::shared_ptr<const ZobristTable> table_;
  std::shared_ptr<const FeatureProjection> projection_;
  KeyFn custom_;
};

}  // namespace parsearch
