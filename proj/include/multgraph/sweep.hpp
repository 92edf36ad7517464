#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "kernel.hpp"
#include "partition.hpp"
#include "root_system.hpp"
#include "tensor.hpp"
#include "theta.hpp"

namespace multgraph {

struct SweepRow {
  int rank;
  double pi_r;
  double pi_limit;
  double gap;
};

/// Worker count: THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      n = static_cast<unsigned>(v);
  }
  return n;
}

/// Pi_r(lambda -> mu) for each r in [r_from, r_to] next to the limit value.
inline std::vector<SweepRow>
convergence_sweep(const Partition &delta, const Partition &lambda,
                  const Partition &mu, Family x, const ThetaSpec &theta,
                  int r_from, int r_to,
                  double tol = default_limit_tolerance) {
  detail::require(!delta.empty(), "delta must be a nonzero partition");
  detail::require(theta.sup() < 1, "sweeps need sup theta < 1");
  detail::require(r_from <= r_to, "empty rank range");
  const int r_min = std::max({lambda.length(), delta.length(), mu.length(),
                              x == Family::D ? 2 : 1});
  detail::require(r_from >= r_min, "ranks must be at least " +
                                       std::to_string(r_min));
  const auto m_stable = stable_tensor_multiplicity(lambda, delta, mu, x);
  detail::require(m_stable > 0, lambda.to_string() + " -> " + mu.to_string() +
                                    " is not an edge for delta = " +
                                    delta.to_string());

  SCache limit(theta, tol);
  const double pi_limit = limit.probability(lambda, delta, mu, m_stable);

  auto at_rank = [&](int r) {
    const FamilyRank fr(x, r);
    SCache S(theta, fr);
    const auto m = tensor_decompose(lambda, delta, fr).multiplicity(mu);
    const double pi = m == 0 ? 0.0 : S.probability(lambda, delta, mu, m);
    return SweepRow{r, pi, pi_limit, std::abs(pi - pi_limit)};
  };

  std::vector<SweepRow> rows(static_cast<std::size_t>(r_to - r_from + 1));
  const unsigned workers = worker_count();
  std::size_t next = 0;
  while (next < rows.size()) {
    std::vector<std::future<SweepRow>> batch;
    for (unsigned w = 0; w < workers && next < rows.size(); ++w, ++next)
      batch.push_back(std::async(workers > 1 ? std::launch::async
                                             : std::launch::deferred,
                                 at_rank, r_from + static_cast<int>(next)));
    const std::size_t base = next - batch.size();
    for (std::size_t k = 0; k < batch.size(); ++k)
      rows[base + k] = batch[k].get();
  }
  return rows;
}

} // namespace multgraph
