#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "kernel.hpp"
#include "partition.hpp"
#include "root_system.hpp"
#include "tensor.hpp"
#include "theta.hpp"

namespace multgraph {

/// SplitMix64. state += 0x9e3779b97f4a7c15, then the output is the state
/// mixed by two xor-shift-multiply rounds and a final xor-shift.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

using ChainSource = std::variant<FamilyRank, Family>;

/// Outgoing edges of one vertex, canonically ordered.
struct KernelRow {
  std::vector<Partition> targets;
  std::vector<double> probabilities;
  double sum = 0;
};

/// Draws Markov chain steps row by row, without building the whole graph.
class TrajectorySampler {
public:
  TrajectorySampler(Partition delta, ChainSource source, ThetaSpec theta,
                    double tol = default_limit_tolerance)
      : delta_(std::move(delta)), source_(source),
        S_(make_cache(theta, source, tol)) {
    detail::require(!delta_.empty(), "delta must be a nonzero partition");
    if (const auto *fr = std::get_if<FamilyRank>(&source_))
      detail::require(delta_.length() <= fr->rank(),
                      "delta has more than r parts");
  }

  const Partition &delta() const { return delta_; }

  KernelRow row(const Partition &lambda) {
    const FamilyRank fr = std::visit(
        [&](const auto &s) {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, FamilyRank>)
            return s;
          else
            return FamilyRank(Family::A, stable_rank(lambda, delta_, Family::A));
        },
        source_);
    const auto &dec = tensor_decompose(lambda, delta_, fr);
    detail::require(!dec.has_discards(),
                    "family D at rank " + std::to_string(fr.rank()) +
                        " leaves the partition vertices from " +
                        lambda.to_string());
    KernelRow out;
    for (const auto &[mu, m] : dec.entries) {
      const double p = S_.probability(lambda, delta_, mu, m);
      out.targets.push_back(mu);
      out.probabilities.push_back(p);
      out.sum += p;
    }
    return out;
  }

  /// Inverse-CDF draw from the row of lambda, renormalized by its sum.
  Partition step(const Partition &lambda, SplitMix64 &rng) {
    const KernelRow r = row(lambda);
    const double u = rng.uniform() * r.sum;
    double acc = 0;
    for (std::size_t k = 0; k < r.targets.size(); ++k) {
      acc += r.probabilities[k];
      if (u < acc && r.probabilities[k] > 0)
        return r.targets[k];
    }
    for (std::size_t k = r.targets.size(); k-- > 0;)
      if (r.probabilities[k] > 0)
        return r.targets[k];
    throw NumericalConsistencyError("row of " + lambda.to_string() +
                                    " has no positive entry");
  }

  /// (delta, 1), (lambda_2, 2), ..., (lambda_steps, steps).
  std::vector<Partition> trajectory(int steps, std::uint64_t seed) {
    detail::require(steps >= 1, "a trajectory has at least one vertex");
    SplitMix64 rng(seed);
    std::vector<Partition> path{delta_};
    while (static_cast<int>(path.size()) < steps)
      path.push_back(step(path.back(), rng));
    return path;
  }

private:
  static SCache make_cache(const ThetaSpec &theta, const ChainSource &source,
                           double tol) {
    if (const auto *fr = std::get_if<FamilyRank>(&source))
      return SCache(theta, *fr);
    return SCache(theta, tol);
  }

  Partition delta_;
  ChainSource source_;
  SCache S_;
};

/// One trajectory of the chain M_theta; limit chains are given by a family.
/// Every limit family gives the same chain, which only moves along
/// top-degree edges.
inline std::vector<Partition> sample_trajectory(const Partition &delta,
                                                const ChainSource &source,
                                                const ThetaSpec &theta,
                                                int steps, std::uint64_t seed) {
  return TrajectorySampler(delta, source, theta).trajectory(steps, seed);
}

} // namespace multgraph
