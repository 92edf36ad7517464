#pragma once

// Normalized character specializations S_lambda(theta) and the transition
// kernels built from them, at finite rank and in the infinite-rank limit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "partition.hpp"
#include "root_system.hpp"
#include "tensor.hpp"
#include "theta.hpp"

namespace multgraph {

inline constexpr double finite_row_tolerance = 1e-9;
inline constexpr double limit_row_tolerance = 1e-6;
inline constexpr double default_limit_tolerance = 1e-10;
inline constexpr int default_limit_rank_cap = 200;

/// theta_[r] = (theta_i)_{i in I}
inline std::vector<double> theta_prefix(const ThetaSpec &theta,
                                        const FamilyRank &fr) {
  return theta.first(fr.index_count());
}

/// theta^[nu] = prod_i theta_i^{<nu, omega_i^vee>}; the exponents are exact,
/// only the powering is floating point.
inline double theta_exponent(const WeightVec &nu, const ThetaSpec &theta,
                             const FamilyRank &fr) {
  const auto c = simple_root_coordinates(nu, fr);
  double v = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Rational(0))
      continue;
    const double t = theta(static_cast<int>(i) + 1);
    if (c[i].denominator() == 1)
      v *= std::pow(t, static_cast<double>(c[i].numerator()));
    else
      v *= std::pow(t, boost::rational_cast<double>(c[i]));
  }
  return v;
}

namespace detail {

/// theta^[nu] for integral nu with exponents given doubled.
inline double theta_power_doubled(const std::vector<std::int64_t> &c2,
                                  const std::vector<double> &theta) {
  double v = 1;
  for (std::size_t i = 0; i < c2.size(); ++i) {
    if (c2[i] == 0)
      continue;
    v *= (c2[i] % 2 == 0) ? std::pow(theta[i], static_cast<double>(c2[i] / 2))
                          : std::pow(theta[i], static_cast<double>(c2[i]) / 2);
  }
  return v;
}

/// sum over the W-orbit of the dominant weight `dom` of theta^[lambda - w].
///
/// The exponent of theta_i is a prefix sum of lambda - w for every simple
/// root except the last one (two for family D), so the orbit is swept
/// position by position, tracking which coordinate values are still to be
/// placed, the signed prefix sum and the parity of sign changes.
inline double orbit_specialization(const IntWeight &lambda, const IntWeight &dom,
                                   const FamilyRank &fr,
                                   const std::vector<double> &theta) {
  const int r = fr.rank();
  const Family fam = fr.family();

  std::vector<int> values;
  std::vector<int> counts;
  {
    std::map<int, int> c;
    for (int x : dom)
      ++c[fam == Family::A ? x : std::abs(x)];
    for (const auto &[v, k] : c) {
      values.push_back(v);
      counts.push_back(k);
    }
  }
  const bool has_zero = fam != Family::A && values.front() == 0;
  const int want_parity = dom.back() < 0 ? 1 : 0;
  const std::size_t nv = values.size();
  std::vector<std::size_t> stride(nv);
  std::size_t states = 1;
  for (std::size_t k = 0; k < nv; ++k) {
    stride[k] = states;
    states *= static_cast<std::size_t>(counts[k]) + 1;
  }
  int spread = 0;
  for (int x : dom)
    spread += std::abs(x);
  const std::size_t sums = static_cast<std::size_t>(2 * spread + 1);
  auto at = [&](std::size_t code, int sum, int parity) {
    return (code * sums + static_cast<std::size_t>(sum + spread)) * 2 +
           static_cast<std::size_t>(parity);
  };
  auto count_of = [&](std::size_t code, std::size_t k) {
    return static_cast<int>(code / stride[k] %
                            (static_cast<std::size_t>(counts[k]) + 1));
  };

  std::vector<long long> lambda_prefix(static_cast<std::size_t>(r));
  long long acc = 0;
  for (int i = 0; i < r; ++i)
    lambda_prefix[i] = acc += lambda[i];

  const int prefix_roots = (fam == Family::D) ? r - 2 : r - 1;
  std::vector<std::vector<double>> powers(static_cast<std::size_t>(std::max(r, 1)));
  auto power = [&](int i, long long e) {
    ensure(e >= 0, "weight below lambda has a negative simple-root coordinate");
    auto &row = powers[i];
    while (static_cast<long long>(row.size()) <= e)
      row.push_back(row.empty() ? 1.0 : row.back() * theta[i]);
    return row[static_cast<std::size_t>(e)];
  };

  std::size_t full = 0;
  for (std::size_t k = 0; k < nv; ++k)
    full += static_cast<std::size_t>(counts[k]) * stride[k];

  std::vector<double> cur(states * sums * 2, 0.0), next;
  cur[at(full, 0, 0)] = 1.0;

  // positions 0 .. r-2
  for (int j = 0; j + 1 < r; ++j) {
    next.assign(cur.size(), 0.0);
    for (std::size_t code = 0; code < states; ++code)
      for (int sum = -spread; sum <= spread; ++sum)
        for (int par = 0; par < 2; ++par) {
          const double w = cur[at(code, sum, par)];
          if (w == 0)
            continue;
          for (std::size_t k = 0; k < nv; ++k) {
            if (count_of(code, k) == 0)
              continue;
            const int v = values[k];
            const int nsigns = (fam == Family::A || v == 0) ? 1 : 2;
            for (int s = 0; s < nsigns; ++s) {
              const int placed = s ? -v : v;
              const int nsum = sum + placed;
              double f = w;
              if (j < prefix_roots)
                f *= power(j, lambda_prefix[j] - nsum);
              next[at(code - stride[k], nsum, par ^ s)] += f;
            }
          }
        }
    cur.swap(next);
  }

  // last position, with the family-specific final simple roots
  double total = 0;
  for (std::size_t code = 0; code < states; ++code)
    for (int sum = -spread; sum <= spread; ++sum)
      for (int par = 0; par < 2; ++par) {
        const double w = cur[at(code, sum, par)];
        if (w == 0)
          continue;
        for (std::size_t k = 0; k < nv; ++k) {
          if (count_of(code, k) == 0)
            continue;
          const int v = values[k];
          const int nsigns = (fam == Family::A || v == 0) ? 1 : 2;
          for (int s = 0; s < nsigns; ++s) {
            const int last = s ? -v : v;
            const int npar = par ^ s;
            const long long gap = lambda_prefix[r - 1] - (sum + last);
            switch (fam) {
            case Family::A:
              ensure(gap == 0, "type A weight of the wrong degree");
              total += w;
              break;
            case Family::C:
              ensure(gap % 2 == 0, "type C weight outside lambda + Q");
              total += w * power(r - 1, gap / 2);
              break;
            case Family::B:
              total += w * power(r - 1, gap);
              break;
            case Family::D: {
              if (!has_zero && npar != want_parity)
                break;
              const long long head =
                  (r >= 2 ? lambda_prefix[r - 2] : 0) - sum;
              const long long tail = lambda[r - 1] - last;
              ensure((head - tail) % 2 == 0, "type D weight outside lambda + Q");
              total += w * power(r - 2, (head - tail) / 2) *
                       power(r - 1, (head + tail) / 2);
              break;
            }
            }
          }
        }
      }
  return total;
}

} // namespace detail

/// S_lambda(theta_[r]) = sum_omega K_{lambda,omega} theta^[lambda - omega]
/// with theta given explicitly as (theta_i)_{i in I}.
inline double specialize_S(const Partition &lambda,
                           const std::vector<double> &theta,
                           const FamilyRank &fr) {
  detail::require(static_cast<int>(theta.size()) >= fr.index_count(),
                  "too few theta values for the rank");
  for (double t : theta)
    detail::require(t > 0, "theta values must be positive");
  const auto &chi = weight_multiplicities(lambda, fr);
  const IntWeight top = embed(lambda, fr);
  double s = 0;
  for (const auto &e : chi.dominant_weights())
    s += static_cast<double>(e.multiplicity) *
         detail::orbit_specialization(top, e.weight, fr, theta);
  return s;
}

inline double specialize_S(const Partition &lambda, const ThetaSpec &theta,
                           const FamilyRank &fr) {
  return specialize_S(lambda, theta_prefix(theta, fr), fr);
}

/// Closed product for S_lambda^{gl_r}(b, ..., b), r > l(lambda).
inline double principal_specialization_A(const Partition &lambda, double b,
                                         int r) {
  detail::require(r > lambda.length(),
                  "the product formula needs r > l(lambda)");
  detail::require(b > 0 && b < 1, "b must lie in (0,1)");
  const double lb = std::log(b);
  auto one_minus = [lb](int k) { return -std::expm1(k * lb); };
  const int l = lambda.length();
  double v = 1;
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j)
      v *= one_minus(lambda[i - 1] - lambda[j - 1] + j - i) / one_minus(j - i);
  for (int i = 1; i <= l; ++i)
    for (int j = l + 1; j <= r; ++j)
      v *= one_minus(lambda[i - 1] + j - i) / one_minus(j - i);
  return v;
}

struct LimitValue {
  double value;
  double last_increment; ///< error estimate
  int rank;              ///< rank at which the increment fell below tol
};

namespace detail {

/// S_lambda^{gl_k}(theta_[k]) for k = 1, 2, ... by the branching rule
/// s_nu(x_1..x_k) = sum_{mu interlacing nu} s_mu(x_1..x_{k-1}) x_k^{|nu|-|mu|}
/// at x_j = theta_1 ... theta_{j-1}; S_lambda = s_lambda(x) / x^lambda.
class GlBranching {
public:
  GlBranching(const Partition &lambda, const ThetaSpec &theta)
      : lambda_(lambda), theta_(theta), len_(lambda.length()) {
    std::vector<int> nu(static_cast<std::size_t>(len_), 0);
    collect(nu, 0);
    std::sort(shapes_.begin(), shapes_.end());
    for (std::size_t i = 0; i < shapes_.size(); ++i)
      index_.emplace(shapes_[i], i);
    below_.resize(shapes_.size());
    for (std::size_t i = 0; i < shapes_.size(); ++i) {
      std::vector<int> mu(static_cast<std::size_t>(len_), 0);
      interlace(shapes_[i], mu, 0, i);
    }
    values_.assign(shapes_.size(), 0.0);
    values_[index_.at(std::vector<int>(static_cast<std::size_t>(len_), 0))] = 1.0;
    top_ = index_.at(lambda.padded(len_));
  }

  /// Adds the next variable and returns S_lambda at the new rank.
  double advance() {
    ++k_;
    if (k_ > 1)
      x_ *= theta_(k_ - 1);
    if (k_ <= len_)
      log_x_lambda_ += lambda_[k_ - 1] * std::log(x_);
    std::vector<double> powers{1.0};
    std::vector<double> next(values_.size(), 0.0);
    for (std::size_t i = 0; i < shapes_.size(); ++i)
      for (const auto &[j, d] : below_[i]) {
        while (static_cast<int>(powers.size()) <= d)
          powers.push_back(powers.back() * x_);
        next[i] += values_[j] * powers[d];
      }
    values_.swap(next);
    return values_[top_] * std::exp(-log_x_lambda_);
  }

  int rank() const { return k_; }

private:
  void collect(std::vector<int> &nu, int i) {
    if (i == len_) {
      shapes_.push_back(nu);
      return;
    }
    const int cap = i == 0 ? lambda_[0] : std::min(lambda_[i], nu[i - 1]);
    for (int v = 0; v <= cap; ++v) {
      nu[i] = v;
      collect(nu, i + 1);
    }
    nu[i] = 0;
  }

  void interlace(const std::vector<int> &nu, std::vector<int> &mu, int i,
                 std::size_t target) {
    if (i == len_) {
      int d = 0;
      for (int t = 0; t < len_; ++t)
        d += nu[t] - mu[t];
      below_[target].emplace_back(index_.at(mu), d);
      return;
    }
    const int lo = i + 1 < len_ ? nu[i + 1] : 0;
    for (int v = lo; v <= nu[i]; ++v) {
      mu[i] = v;
      interlace(nu, mu, i + 1, target);
    }
    mu[i] = 0;
  }

  Partition lambda_;
  ThetaSpec theta_;
  int len_;
  std::vector<std::vector<int>> shapes_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, int>>> below_;
  std::vector<double> values_;
  std::size_t top_ = 0;
  int k_ = 0;
  double x_ = 1.0;
  double log_x_lambda_ = 0.0;
};

} // namespace detail

/// S_lambda^{gl_r}(theta_[r]) for r = 1..r_max (zero where r < l(lambda)).
inline std::vector<double> type_a_specializations(const Partition &lambda,
                                                  const ThetaSpec &theta,
                                                  int r_max) {
  detail::GlBranching g(lambda, theta);
  std::vector<double> out;
  for (int r = 1; r <= r_max; ++r)
    out.push_back(g.advance());
  return out;
}

/// S_lambda^A(theta) = lim_r S_lambda^{gl_r}(theta_[r]); the sequence is
/// weakly increasing and bounded when sup theta < 1.
inline LimitValue limit_S_A(const Partition &lambda, const ThetaSpec &theta,
                            double tol = default_limit_tolerance,
                            int rank_cap = default_limit_rank_cap) {
  detail::require(theta.sup() < 1, "limits need sup theta < 1");
  detail::require(tol > 0, "tolerance must be positive");
  if (lambda.empty())
    return {1.0, 0.0, 1};
  detail::GlBranching g(lambda, theta);
  double prev = 0;
  while (g.rank() < lambda.length())
    prev = g.advance();
  while (g.rank() < rank_cap) {
    const double cur = g.advance();
    const double inc = cur - prev;
    if (inc < -1e-12 * cur)
      throw NumericalConsistencyError(
          "S_" + lambda.to_string() + "^{gl_r} decreased at r = " +
          std::to_string(g.rank()));
    prev = cur;
    if (inc <= 4 * std::numeric_limits<double>::epsilon() * cur)
      return {cur, inc, g.rank()};
    if (inc < tol && g.rank() == rank_cap)
      return {cur, inc, g.rank()};
  }
  throw NumericalConsistencyError("limit of S_" + lambda.to_string() +
                                  " not reached within rank " +
                                  std::to_string(rank_cap));
}

struct DefectBound {
  double defect; ///< S^{g_r} - S^{gl_r}
  double bound;
};

/// Gap between the C/B/D and type-A specializations at rank r, and its
/// a-priori bound b^{r-l+k} (dim V(box))^{|lambda|}.
inline DefectBound defect_and_bound(const Partition &lambda,
                                    const ThetaSpec &theta,
                                    const FamilyRank &fr) {
  detail::require(fr.family() != Family::A,
                  "the defect compares families C, B, D with type A");
  const double b = theta.sup();
  detail::require(b < 1, "the defect bound needs sup theta < 1");
  detail::require(fr.rank() >= lambda.length(), "needs r >= l(lambda)");
  const int r = fr.rank();
  const int l = lambda.length();
  const double defect = specialize_S(lambda, theta, fr) -
                        specialize_S(lambda, theta, FamilyRank(Family::A, r));
  int shift = 0;
  switch (fr.family()) {
  case Family::C:
    shift = 1;
    break;
  case Family::B:
    shift = 0;
    break;
  case Family::D:
    shift = 2;
    break;
  case Family::A:
    break;
  }
  const double bound = std::pow(b, r - l + shift) *
                       std::pow(static_cast<double>(fr.defining_dimension()),
                                lambda.size());
  const double slack = 1e-12 * std::max(1.0, std::abs(defect));
  if (defect < -slack || defect > bound + slack)
    throw NumericalConsistencyError(
        "defect " + std::to_string(defect) + " of S_" + lambda.to_string() +
        " at " + fr.to_string() + " lies outside [0, " + std::to_string(bound) +
        "]");
  return {defect, bound};
}

/// Edge probabilities aligned with graph.edges(); row sums aligned with
/// graph.rows().
struct TransitionKernel {
  MultiplicativeGraph graph;
  ThetaSpec theta;
  std::vector<double> probabilities;
  std::vector<double> row_sums;

  bool is_limit() const { return graph.is_limit(); }

  double probability(const Partition &from, int level,
                     const Partition &to) const {
    const auto k = graph.find_edge(from, level, to);
    return k == MultiplicativeGraph::npos ? 0.0 : probabilities[k];
  }
};

namespace detail {

inline IntWeight edge_shift(const Partition &lambda, const Partition &delta,
                            const Partition &mu, int r) {
  IntWeight v(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    v[i] = lambda[i] + delta[i] - mu[i];
  return v;
}

inline void check_rows(TransitionKernel &k, double tol) {
  const auto &g = k.graph;
  for (const auto &row : g.rows()) {
    double s = 0;
    for (std::size_t e = row.begin; e < row.end; ++e)
      s += k.probabilities[e];
    k.row_sums.push_back(s);
    if (std::abs(s - 1) > tol)
      throw NumericalConsistencyError(
          "row of vertex (" + row.from.to_string() + ", " +
          std::to_string(row.level) + ") sums to " + std::to_string(s));
  }
}

} // namespace detail

/// m S_mu / (S_lambda S_delta) theta^[lambda + delta - mu] at a finite rank,
/// given the S values.
inline double edge_probability(const Partition &lambda, const Partition &delta,
                               const Partition &mu, std::uint64_t m,
                               double s_lambda, double s_delta, double s_mu,
                               const FamilyRank &fr,
                               const std::vector<double> &theta) {
  const auto c2 = doubled_simple_root_coordinates(
      detail::edge_shift(lambda, delta, mu, fr.rank()), fr);
  return static_cast<double>(m) * s_mu / (s_lambda * s_delta) *
         detail::theta_power_doubled(c2, theta);
}

/// Memoized S values for one theta, at one finite rank or in the type-A limit.
class SCache {
public:
  SCache(ThetaSpec theta, FamilyRank fr)
      : theta_(std::move(theta)), fr_(fr), values_(theta_prefix(theta_, fr)) {}
  SCache(ThetaSpec theta, double tol)
      : theta_(std::move(theta)), limit_tol_(tol) {
    detail::require(theta_.sup() < 1, "limits need sup theta < 1");
  }

  bool is_limit() const { return !fr_.has_value(); }
  const ThetaSpec &theta() const { return theta_; }

  double operator()(const Partition &p) {
    auto it = table_.find(p);
    if (it == table_.end()) {
      const double v = is_limit() ? limit_S_A(p, theta_, limit_tol_).value
                                  : specialize_S(p, values_, *fr_);
      it = table_.emplace(p, v).first;
    }
    return it->second;
  }

  /// Pi(lambda -> mu) for an edge of multiplicity m.
  double probability(const Partition &lambda, const Partition &delta,
                     const Partition &mu, std::uint64_t m) {
    if (!is_limit())
      return edge_probability(lambda, delta, mu, m, (*this)(lambda),
                              (*this)(delta), (*this)(mu), *fr_, values_);
    if (mu.size() < lambda.size() + delta.size())
      return 0.0;
    const FamilyRank a(
        Family::A,
        std::max({lambda.length(), delta.length(), mu.length()}) + 1);
    return edge_probability(lambda, delta, mu, m, (*this)(lambda),
                            (*this)(delta), (*this)(mu), a,
                            theta_prefix(theta_, a));
  }

private:
  ThetaSpec theta_;
  std::optional<FamilyRank> fr_;
  std::vector<double> values_;
  double limit_tol_ = default_limit_tolerance;
  std::map<Partition, double> table_;
};

/// Pi_theta on a finite-rank graph:
/// m S_mu / (S_lambda S_delta) theta^[lambda + delta - mu].
inline TransitionKernel transition_kernel(const MultiplicativeGraph &g,
                                          const ThetaSpec &theta) {
  detail::require(!g.is_limit(), "use limit_kernel for limit graphs");
  SCache S(theta, g.computation_rank());
  TransitionKernel k{g, theta, {}, {}};
  for (const auto &e : g.edges())
    k.probabilities.push_back(S.probability(e.from, g.delta(), e.to, e.weight));
  detail::check_rows(k, finite_row_tolerance);
  return k;
}

/// The rank-independent kernel on a limit graph: type-A data on edges with
/// |mu| = |lambda| + |delta|, zero on the others.
inline TransitionKernel limit_kernel(const MultiplicativeGraph &g,
                                     const ThetaSpec &theta,
                                     double tol = default_limit_tolerance) {
  detail::require(g.is_limit(), "limit_kernel needs a limit graph");
  SCache S(theta, tol);
  const Partition &delta = g.delta();
  TransitionKernel k{g, theta, {}, {}};
  for (const auto &e : g.edges()) {
    if (e.to.size() == e.from.size() + delta.size())
      detail::ensure(
          stable_tensor_multiplicity(e.from, delta, e.to, Family::A) == e.weight,
          "top-degree multiplicity of " + e.from.to_string() + " -> " +
              e.to.to_string() + " differs from type A");
    k.probabilities.push_back(S.probability(e.from, delta, e.to, e.weight));
  }
  detail::check_rows(k, limit_row_tolerance);
  return k;
}

} // namespace multgraph
