#pragma once

// Tensor product multiplicities m_{lambda,mu} and tensor power multiplicities
// f_{n,mu} by the Racah-Speiser rule.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "root_system.hpp"

namespace multgraph {

using PartitionCounts = std::map<Partition, std::uint64_t, CanonicalLess>;

/// Irreducible constituents keyed by partition. Family D can also produce
/// dominant weights with a negative last coordinate; those are not graph
/// vertices and are kept aside in `discarded`.
struct DecompositionMap {
  PartitionCounts entries;
  std::map<IntWeight, std::uint64_t> discarded;
  /// sum over discarded components of multiplicity * dimension
  std::uint64_t discarded_nonpartition_mass = 0;

  std::uint64_t multiplicity(const Partition &mu) const {
    auto it = entries.find(mu);
    return it == entries.end() ? 0 : it->second;
  }
  bool has_discards() const { return !discarded.empty(); }
};

namespace detail {

/// Racah-Speiser over the weights of `small`, shifting the highest weight of
/// `big`. Returns signed accumulations keyed by dominant weight.
inline std::map<IntWeight, long long>
racah_speiser(const IntWeight &big, const WeightMultiplicityMap &small,
              const FamilyRank &fr) {
  const IntWeight rho2 = fr.doubled_rho();
  std::map<IntWeight, long long> acc;
  IntWeight x(big.size());
  small.for_each_weight([&](const IntWeight &nu, std::uint64_t k) {
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = 2 * (big[i] + nu[i]) + rho2[i];
    const int sign = reflect_to_dominant(x, fr.family());
    if (sign == 0)
      return;
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] -= rho2[i];
      ensure(x[i] % 2 == 0, "reflected weight left the integer lattice");
      x[i] /= 2;
    }
    acc[x] += sign * static_cast<long long>(k);
  });
  return acc;
}

using TensorKey = std::tuple<int, int, std::vector<int>, std::vector<int>>;

struct TensorCache {
  std::shared_mutex mutex;
  std::map<TensorKey, std::shared_ptr<const DecompositionMap>> table;
};

inline TensorCache &tensor_cache() {
  static TensorCache cache;
  return cache;
}

} // namespace detail

/// V(lambda) (x) V(delta) = sum_mu V(mu)^{m_{lambda,mu}}, computed with the
/// weights of whichever factor is smaller.
inline DecompositionMap compute_tensor_decomposition(const Partition &lambda,
                                                     const Partition &delta,
                                                     const FamilyRank &fr) {
  const IntWeight lam = embed(lambda, fr);
  const IntWeight del = embed(delta, fr);
  const bool lambda_smaller =
      weyl_dimension_estimate(lambda, fr) < weyl_dimension_estimate(delta, fr);
  const auto acc =
      lambda_smaller
          ? detail::racah_speiser(del, weight_multiplicities(lambda, fr), fr)
          : detail::racah_speiser(lam, weight_multiplicities(delta, fr), fr);

  DecompositionMap out;
  const int degree = lambda.size() + delta.size();
  for (const auto &[w, m] : acc) {
    if (m < 0)
      throw InternalConsistencyError(
          "Racah-Speiser left a negative multiplicity for " + lambda.to_string() +
          " (x) " + delta.to_string() + " at " + fr.to_string());
    if (m == 0)
      continue;
    const auto mult = static_cast<std::uint64_t>(m);
    if (w.back() < 0) {
      out.discarded.emplace(w, mult);
      Partition abs_shape([&] {
        IntWeight a = w;
        a.back() = -a.back();
        return a;
      }());
      // V(w) and its image under the diagram automorphism share a dimension.
      out.discarded_nonpartition_mass +=
          mult * weight_multiplicities(abs_shape, fr).dimension();
      continue;
    }
    Partition mu(w);
    detail::ensure(mu.size() <= degree,
                   "constituent exceeds the degree bound |lambda|+|delta|");
    detail::ensure(fr.family() != Family::A || mu.size() == degree,
                   "type A constituent of the wrong degree");
    out.entries.emplace(std::move(mu), mult);
  }
  return out;
}

/// Memoized compute_tensor_decomposition.
inline const DecompositionMap &tensor_decompose(const Partition &lambda,
                                                const Partition &delta,
                                                const FamilyRank &fr) {
  detail::require(lambda.length() <= fr.rank() && delta.length() <= fr.rank(),
                  "tensor factors must have at most r = " +
                      std::to_string(fr.rank()) + " parts");
  auto &cache = detail::tensor_cache();
  detail::TensorKey key{static_cast<int>(fr.family()), fr.rank(),
                        lambda.parts(), delta.parts()};
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end())
      return *it->second;
  }
  auto computed = std::make_shared<const DecompositionMap>(
      compute_tensor_decomposition(lambda, delta, fr));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.table.emplace(std::move(key), std::move(computed));
  return *it->second;
}

inline void clear_tensor_cache() {
  auto &cache = detail::tensor_cache();
  std::unique_lock lock(cache.mutex);
  cache.table.clear();
}

/// f_{n,mu} for n = 1..depth; element n-1 holds level n. Level n+1 is the sum
/// over level-n partitions lambda of f_{n,lambda} * (V(lambda) (x) V(delta)).
/// Non-partition constituents (family D) are tallied, not propagated.
inline std::vector<DecompositionMap>
iterated_power_multiplicities(const Partition &delta, int depth,
                              const FamilyRank &fr) {
  detail::require(!delta.empty(), "delta must be a nonzero partition");
  detail::require(depth >= 1, "depth must be positive");
  detail::require(delta.length() <= fr.rank(),
                  "delta has more than r = " + std::to_string(fr.rank()) +
                      " parts");
  std::vector<DecompositionMap> levels(1);
  levels[0].entries.emplace(delta, 1);
  for (int n = 1; n < depth; ++n) {
    DecompositionMap next;
    for (const auto &[lambda, f] : levels.back().entries) {
      const auto &dec = tensor_decompose(lambda, delta, fr);
      for (const auto &[mu, m] : dec.entries)
        next.entries[mu] += f * m;
      for (const auto &[w, m] : dec.discarded)
        next.discarded[w] += f * m;
      next.discarded_nonpartition_mass += f * dec.discarded_nonpartition_mass;
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

/// Smallest rank at which family X is defined and lambda, delta both embed.
inline int stable_rank(const Partition &lambda, const Partition &delta,
                       Family x) {
  int r = std::max(1, lambda.length() + delta.length());
  if (x == Family::D)
    r = std::max(r, 2);
  return r;
}

/// m_{lambda,mu}^{(delta,X)} evaluated at r* = l(lambda)+l(delta), where the
/// multiplicities no longer depend on the rank.
inline std::uint64_t stable_tensor_multiplicity(const Partition &lambda,
                                                const Partition &delta,
                                                const Partition &mu, Family x) {
  const FamilyRank fr(x, stable_rank(lambda, delta, x));
  if (mu.length() > fr.rank())
    return 0;
  return tensor_decompose(lambda, delta, fr).multiplicity(mu);
}

} // namespace multgraph
