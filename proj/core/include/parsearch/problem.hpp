#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parsearch/common.hpp"

namespace parsearch {

// Implicit state-space graph. expand() and features() append to their output
// vectors; features(s) must identify s uniquely and feed the work-distribution
// hashes, append_canonical() writes the byte form used for traces and for the
// multiplicative hash key.
template <class P>
concept SearchProblem =
    std::copy_constructible<P> && std::equality_comparable<typename P::State> &&
    std::copyable<typename P::State> &&
    requires(const P& p, const typename P::State& s,
             std::vector<Successor<typename P::State>>& successors,
             std::vector<FeatureId>& features, std::string& bytes) {
      { p.initial() } -> std::convertible_to<typename P::State>;
      { p.is_goal(s) } -> std::same_as<bool>;
      p.expand(s, successors);
      { p.h(s) } -> std::convertible_to<Cost>;
      p.features(s, features);
      { p.feature_count() } -> std::convertible_to<std::size_t>;
      p.append_canonical(s, bytes);
      { std::hash<typename P::State>{}(s) } -> std::convertible_to<std::size_t>;
    };

template <SearchProblem P>
using StateOf = typename P::State;

template <SearchProblem P>
std::string canonical_bytes(const P& problem, const StateOf<P>& s) {
  std::string out;
  problem.append_canonical(s, out);
  return out;
}

// Problems defined on an integer lattice expose the coordinate sum used by the
// hyperplane owner function.
template <class P>
concept LatticeShaped = SearchProblem<P> && requires(const P& p, const typename P::State& s) {
  { p.coordinate_sum(s) } -> std::convertible_to<std::uint64_t>;
};

}  // namespace parsearch
