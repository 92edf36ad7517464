#pragma once

// Weight multiplicities K_{lambda,omega} of irreducible modules with
// partition highest weight, by Freudenthal's recursion over dominant weights.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "root_system.hpp"

namespace multgraph {

using IntWeight = std::vector<int>;
using WeightTable = std::map<IntWeight, std::uint64_t>;

namespace detail {

/// Positive root stored sparsely: si*e_i + sj*e_j (j < 0 for e_i / 2e_i).
struct SparseRoot {
  int i, si, j, sj;

  int dot(const IntWeight &v) const {
    return si * v[i] + (j >= 0 ? sj * v[j] : 0);
  }
  int norm2() const { return si * si + (j >= 0 ? sj * sj : 0); }
  void add_to(IntWeight &v, int k) const {
    v[i] += k * si;
    if (j >= 0)
      v[j] += k * sj;
  }
};

inline std::vector<SparseRoot> sparse_positive_roots(const FamilyRank &fr) {
  const int r = fr.rank();
  std::vector<SparseRoot> roots;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      roots.push_back({i, 1, j, -1});
  if (fr.family() == Family::A)
    return roots;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      roots.push_back({i, 1, j, 1});
  if (fr.family() == Family::C)
    for (int i = 0; i < r; ++i)
      roots.push_back({i, 2, -1, 0});
  if (fr.family() == Family::B)
    for (int i = 0; i < r; ++i)
      roots.push_back({i, 1, -1, 0});
  return roots;
}

inline int checked_int(long long x) {
  detail::ensure(x >= INT32_MIN && x <= INT32_MAX, "integer overflow");
  return static_cast<int>(x);
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX)
    throw DomainError("dimension does not fit in 64 bits");
  return static_cast<std::uint64_t>(p);
}

} // namespace detail

/// Calls f(weight) for every element of the W-orbit of the dominant weight
/// `dom`, each exactly once.
template <class F> void for_each_in_orbit(const IntWeight &dom, Family f, F &&fn) {
  if (f == Family::A) {
    IntWeight v = dom;
    std::sort(v.begin(), v.end());
    do {
      fn(static_cast<const IntWeight &>(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return;
  }
  IntWeight mags(dom.size());
  std::transform(dom.begin(), dom.end(), mags.begin(),
                 [](int x) { return std::abs(x); });
  std::sort(mags.begin(), mags.end());
  const bool has_zero = !mags.empty() && mags.front() == 0;
  const int want_parity = (!dom.empty() && dom.back() < 0) ? 1 : 0;
  std::vector<std::size_t> nonzero;
  IntWeight v;
  do {
    nonzero.clear();
    for (std::size_t k = 0; k < mags.size(); ++k)
      if (mags[k] != 0)
        nonzero.push_back(k);
    const std::uint64_t masks = std::uint64_t{1} << nonzero.size();
    for (std::uint64_t m = 0; m < masks; ++m) {
      if (f == Family::D && !has_zero &&
          (__builtin_popcountll(m) & 1) != want_parity)
        continue;
      v = mags;
      for (std::size_t b = 0; b < nonzero.size(); ++b)
        if (m >> b & 1)
          v[nonzero[b]] = -v[nonzero[b]];
      fn(static_cast<const IntWeight &>(v));
    }
  } while (std::next_permutation(mags.begin(), mags.end()));
}

/// |W . dom| without enumerating.
inline std::uint64_t orbit_size(const IntWeight &dom, Family f) {
  std::map<int, int> counts;
  int nonzero = 0;
  for (int x : dom) {
    const int key = (f == Family::A) ? x : std::abs(x);
    ++counts[key];
    if (x != 0)
      ++nonzero;
  }
  // multinomial r! / prod(c!)
  std::uint64_t size = 1;
  int placed = 0;
  for (const auto &[value, c] : counts) {
    for (int k = 1; k <= c; ++k) {
      ++placed;
      size = detail::checked_mul(size, static_cast<std::uint64_t>(placed));
      size /= static_cast<std::uint64_t>(k);
    }
  }
  if (f == Family::A)
    return size;
  int sign_bits = nonzero;
  if (f == Family::D && nonzero == static_cast<int>(dom.size()) && nonzero > 0)
    --sign_bits;
  return detail::checked_mul(size, std::uint64_t{1} << sign_bits);
}

/// K_{lambda,omega} for one irreducible V(lambda). Only dominant weights are
/// stored; other weights are answered through their dominant representative.
class WeightMultiplicityMap {
public:
  struct Entry {
    IntWeight weight;
    std::uint64_t multiplicity;
    long long height; ///< 2 <lambda - weight, rho^vee>
  };

  WeightMultiplicityMap(Partition lambda, FamilyRank fr,
                        std::vector<Entry> dominant)
      : lambda_(std::move(lambda)), fr_(fr), dominant_(std::move(dominant)) {
    for (std::size_t k = 0; k < dominant_.size(); ++k)
      index_.emplace(dominant_[k].weight, k);
  }

  const Partition &highest_weight() const { return lambda_; }
  const FamilyRank &family_rank() const { return fr_; }

  /// Dominant weights in order of increasing height (lambda first).
  const std::vector<Entry> &dominant_weights() const { return dominant_; }

  std::uint64_t multiplicity(const IntWeight &w) const {
    if (static_cast<int>(w.size()) != fr_.rank())
      return 0;
    auto it = index_.find(dominant_representative(w, fr_.family()));
    return it == index_.end() ? 0 : dominant_[it->second].multiplicity;
  }

  std::uint64_t multiplicity(const WeightVec &w) const {
    if (!w.is_integral())
      return 0;
    return multiplicity(w.to_ints());
  }

  /// f(weight, multiplicity) over every weight with positive multiplicity.
  template <class F> void for_each_weight(F &&f) const {
    for (const auto &e : dominant_)
      for_each_in_orbit(e.weight, fr_.family(),
                        [&](const IntWeight &w) { f(w, e.multiplicity); });
  }

  WeightTable expanded() const {
    WeightTable t;
    for_each_weight([&](const IntWeight &w, std::uint64_t m) { t[w] = m; });
    return t;
  }

  std::uint64_t dimension() const {
    std::uint64_t d = 0;
    for (const auto &e : dominant_) {
      d += detail::checked_mul(e.multiplicity,
                               orbit_size(e.weight, fr_.family()));
    }
    return d;
  }

private:
  Partition lambda_;
  FamilyRank fr_;
  std::vector<Entry> dominant_;
  std::unordered_map<IntWeight, std::size_t, IntWeightHash> index_;
};

/// Freudenthal's recursion without memoization.
inline WeightMultiplicityMap compute_weight_multiplicities(const Partition &lambda,
                                                           const FamilyRank &fr) {
  const IntWeight top = embed(lambda, fr);
  const Family fam = fr.family();
  const auto roots = detail::sparse_positive_roots(fr);
  const IntWeight rho2 = fr.doubled_rho();

  // Dominant weights of V(lambda): closure of {lambda} under subtracting a
  // positive root while staying dominant.
  std::vector<IntWeight> dom{top};
  std::unordered_map<IntWeight, std::size_t, IntWeightHash> seen{{top, 0}};
  for (std::size_t k = 0; k < dom.size(); ++k) {
    for (const auto &a : roots) {
      IntWeight nu = dom[k];
      a.add_to(nu, -1);
      if (!is_dominant(nu, fam) || seen.count(nu))
        continue;
      seen.emplace(nu, dom.size());
      dom.push_back(std::move(nu));
    }
  }

  auto height = [&](const IntWeight &mu) {
    IntWeight diff(top.size());
    for (std::size_t i = 0; i < top.size(); ++i)
      diff[i] = top[i] - mu[i];
    const auto c = doubled_simple_root_coordinates(diff, fr);
    long long h = 0;
    for (auto x : c)
      h += x;
    return h;
  };

  std::vector<WeightMultiplicityMap::Entry> entries;
  entries.reserve(dom.size());
  for (auto &w : dom) {
    const long long h = height(w);
    entries.push_back({std::move(w), 0, h});
  }
  std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) {
    if (a.height != b.height)
      return a.height < b.height;
    return a.weight > b.weight;
  });
  detail::ensure(entries.front().weight == top,
                 "highest weight is not the unique weight of height 0");

  std::unordered_map<IntWeight, std::uint64_t, IntWeightHash> mult;
  auto lookup = [&](const IntWeight &w) -> std::uint64_t {
    auto it = mult.find(dominant_representative(w, fam));
    return it == mult.end() ? 0 : it->second;
  };

  for (auto &e : entries) {
    if (e.weight == top) {
      e.multiplicity = 1;
      mult[e.weight] = 1;
      continue;
    }
    const IntWeight &mu = e.weight;
    // |lambda+rho|^2 - |mu+rho|^2 = <lambda-mu, lambda+mu+2rho>, times 2 so
    // the half-integral rho of family B stays integral.
    long long denom = 0;
    for (std::size_t i = 0; i < mu.size(); ++i)
      denom += static_cast<long long>(top[i] - mu[i]) *
               (2LL * (top[i] + mu[i]) + 2LL * rho2[i]);
    long long numer = 0;
    IntWeight shifted;
    for (const auto &a : roots) {
      shifted = mu;
      for (int k = 1;; ++k) {
        a.add_to(shifted, 1);
        const std::uint64_t m = lookup(shifted);
        if (m == 0)
          break;
        numer += static_cast<long long>(m) * a.dot(shifted);
      }
    }
    numer *= 4; // 2 from the formula, 2 from the doubled denominator
    detail::ensure(denom > 0, "Freudenthal denominator is not positive");
    detail::ensure(numer % denom == 0,
                   "Freudenthal recursion produced a non-integer");
    e.multiplicity = static_cast<std::uint64_t>(numer / denom);
    detail::ensure(e.multiplicity > 0,
                   "dominant weight below lambda has zero multiplicity");
    mult[e.weight] = e.multiplicity;
  }
  return WeightMultiplicityMap(lambda, fr, std::move(entries));
}

namespace detail {

using CharacterKey = std::tuple<int, int, std::vector<int>>;

struct CharacterCache {
  std::shared_mutex mutex;
  std::map<CharacterKey, std::shared_ptr<const WeightMultiplicityMap>> table;
};

inline CharacterCache &character_cache() {
  static CharacterCache cache;
  return cache;
}

} // namespace detail

/// Memoized weight multiplicities of V(lambda). The returned reference stays
/// valid until clear_character_cache().
inline const WeightMultiplicityMap &weight_multiplicities(const Partition &lambda,
                                                          const FamilyRank &fr) {
  detail::require(lambda.length() <= fr.rank(),
                  "partition " + lambda.to_string() + " has more than r = " +
                      std::to_string(fr.rank()) + " parts");
  auto &cache = detail::character_cache();
  detail::CharacterKey key{static_cast<int>(fr.family()), fr.rank(),
                           lambda.parts()};
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end())
      return *it->second;
  }
  auto computed = std::make_shared<const WeightMultiplicityMap>(
      compute_weight_multiplicities(lambda, fr));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.table.emplace(std::move(key), std::move(computed));
  return *it->second;
}

inline void clear_character_cache() {
  auto &cache = detail::character_cache();
  std::unique_lock lock(cache.mutex);
  cache.table.clear();
}

/// dim V(lambda) as the total mass of the weight multiplicities.
inline std::uint64_t dimension(const Partition &lambda, const FamilyRank &fr) {
  return weight_multiplicities(lambda, fr).dimension();
}

/// Weyl dimension formula in floating point; used only to pick the cheaper
/// factor of a tensor product.
inline long double weyl_dimension_estimate(const Partition &lambda,
                                           const FamilyRank &fr) {
  const IntWeight top = embed(lambda, fr);
  const IntWeight rho2 = fr.doubled_rho();
  IntWeight shifted(top.size());
  for (std::size_t i = 0; i < top.size(); ++i)
    shifted[i] = 2 * top[i] + rho2[i];
  long double d = 1;
  for (const auto &a : detail::sparse_positive_roots(fr))
    d *= static_cast<long double>(a.dot(shifted)) / a.dot(rho2);
  return d;
}

} // namespace multgraph
