#pragma once

// Classical root data for gl_r, sp_2r, so_2r+1 and so_2r in the orthonormal
// epsilon basis, together with the weight-lattice arithmetic used by the
// character and kernel code.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "errors.hpp"
#include "partition.hpp"

namespace multgraph {

using Rational = boost::rational<std::int64_t>;

enum class Family { A, C, B, D };

inline char family_letter(Family f) {
  switch (f) {
  case Family::A:
    return 'A';
  case Family::C:
    return 'C';
  case Family::B:
    return 'B';
  case Family::D:
    return 'D';
  }
  return '?';
}

inline Family parse_family(const std::string &s) {
  if (s == "A" || s == "a")
    return Family::A;
  if (s == "C" || s == "c")
    return Family::C;
  if (s == "B" || s == "b")
    return Family::B;
  if (s == "D" || s == "d")
    return Family::D;
  throw DomainError("unknown family '" + s + "' (expected A, C, B or D)");
}

inline constexpr Family all_families[] = {Family::A, Family::C, Family::B,
                                          Family::D};

/// A classical family together with its rank r. For family A the rank is
/// the number of coordinates of gl_r, so the simple system has r-1 roots.
class FamilyRank {
public:
  FamilyRank(Family family, int rank) : family_(family), rank_(rank) {
    detail::require(rank >= 1, "rank must be positive");
    detail::require(family != Family::D || rank >= 2,
                    "family D needs rank >= 2");
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// |I|: r-1 for A, r otherwise.
  int index_count() const { return family_ == Family::A ? rank_ - 1 : rank_; }

  /// Dimension of the defining (one-box) representation.
  int defining_dimension() const {
    switch (family_) {
    case Family::A:
      return rank_;
    case Family::B:
      return 2 * rank_ + 1;
    default:
      return 2 * rank_;
    }
  }

  /// Twice the Weyl vector rho = sum of fundamental weights, as integers.
  std::vector<int> doubled_rho() const {
    std::vector<int> v(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
      switch (family_) {
      case Family::A:
      case Family::D:
        v[i] = 2 * (rank_ - 1 - i);
        break;
      case Family::C:
        v[i] = 2 * (rank_ - i);
        break;
      case Family::B:
        v[i] = 2 * (rank_ - i) - 1;
        break;
      }
    }
    return v;
  }

  std::string to_string() const {
    return std::string(1, family_letter(family_)) + std::to_string(rank_);
  }

  friend bool operator==(const FamilyRank &, const FamilyRank &) = default;

private:
  Family family_;
  int rank_;
};

/// Exact rational vector on epsilon_1..epsilon_r.
class WeightVec {
public:
  WeightVec() = default;
  explicit WeightVec(std::vector<Rational> coords)
      : coords_(std::move(coords)) {}
  explicit WeightVec(const std::vector<int> &coords)
      : coords_(coords.begin(), coords.end()) {}
  WeightVec(std::initializer_list<Rational> coords) : coords_(coords) {}

  static WeightVec zero(int r) {
    return WeightVec(std::vector<Rational>(static_cast<std::size_t>(r)));
  }
  static WeightVec unit(int r, int i, Rational scale = 1) {
    auto w = zero(r);
    w.coords_[static_cast<std::size_t>(i)] = scale;
    return w;
  }
  static WeightVec from_partition(const Partition &p, int r) {
    return WeightVec(p.padded(r));
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational> &coords() const { return coords_; }
  const Rational &operator[](std::size_t i) const { return coords_[i]; }
  Rational &operator[](std::size_t i) { return coords_[i]; }

  Rational coordinate_sum() const {
    return std::accumulate(coords_.begin(), coords_.end(), Rational(0));
  }

  bool is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Rational &q) { return q.denominator() == 1; });
  }

  std::vector<int> to_ints() const {
    detail::require(is_integral(), "weight has non-integral coordinates");
    std::vector<int> v;
    v.reserve(coords_.size());
    for (const auto &q : coords_)
      v.push_back(static_cast<int>(q.numerator()));
    return v;
  }

  WeightVec &operator+=(const WeightVec &o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
      coords_[i] += o.coords_[i];
    return *this;
  }
  WeightVec &operator-=(const WeightVec &o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
      coords_[i] -= o.coords_[i];
    return *this;
  }
  WeightVec &operator*=(const Rational &s) {
    for (auto &q : coords_)
      q *= s;
    return *this;
  }
  friend WeightVec operator+(WeightVec a, const WeightVec &b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec &b) { return a -= b; }
  friend WeightVec operator*(Rational s, WeightVec a) { return a *= s; }
  friend WeightVec operator-(WeightVec a) { return a *= Rational(-1); }

  friend Rational dot(const WeightVec &a, const WeightVec &b) {
    a.check_dim(b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
      s += a.coords_[i] * b.coords_[i];
    return s;
  }

  friend bool operator==(const WeightVec &, const WeightVec &) = default;

  friend std::ostream &operator<<(std::ostream &os, const WeightVec &w) {
    os << '(';
    for (std::size_t i = 0; i < w.coords_.size(); ++i)
      os << (i ? "," : "") << w.coords_[i];
    return os << ')';
  }

private:
  void check_dim(const WeightVec &o) const {
    detail::require(o.coords_.size() == coords_.size(),
                    "weight vectors of different length");
  }

  std::vector<Rational> coords_;
};

/// R+ of the family, in a fixed order: type-A roots e_i - e_j first, then
/// e_i + e_j, then the short/long roots e_i or 2e_i.
inline std::vector<WeightVec> positive_roots(const FamilyRank &fr) {
  const int r = fr.rank();
  std::vector<WeightVec> roots;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      roots.push_back(WeightVec::unit(r, i) - WeightVec::unit(r, j));
  if (fr.family() == Family::A)
    return roots;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      roots.push_back(WeightVec::unit(r, i) + WeightVec::unit(r, j));
  if (fr.family() == Family::C)
    for (int i = 0; i < r; ++i)
      roots.push_back(WeightVec::unit(r, i, 2));
  if (fr.family() == Family::B)
    for (int i = 0; i < r; ++i)
      roots.push_back(WeightVec::unit(r, i));
  return roots;
}

/// Simple roots alpha_i, i in I.
inline std::vector<WeightVec> simple_roots(const FamilyRank &fr) {
  const int r = fr.rank();
  std::vector<WeightVec> s;
  for (int i = 0; i + 1 < r; ++i)
    s.push_back(WeightVec::unit(r, i) - WeightVec::unit(r, i + 1));
  switch (fr.family()) {
  case Family::A:
    break;
  case Family::C:
    s.push_back(WeightVec::unit(r, r - 1, 2));
    break;
  case Family::B:
    s.push_back(WeightVec::unit(r, r - 1));
    break;
  case Family::D:
    s.push_back(WeightVec::unit(r, r - 2) + WeightVec::unit(r, r - 1));
    break;
  }
  return s;
}

inline std::vector<WeightVec> fundamental_weights(const FamilyRank &fr) {
  const int r = fr.rank();
  const int n = fr.index_count();
  const Rational half(1, 2);
  std::vector<WeightVec> w;
  for (int i = 0; i < n; ++i) {
    auto v = WeightVec::zero(r);
    for (int j = 0; j <= i; ++j)
      v[j] = 1;
    w.push_back(std::move(v));
  }
  if (fr.family() == Family::B) {
    for (int j = 0; j < r; ++j)
      w[r - 1][j] = half;
  } else if (fr.family() == Family::D) {
    for (int j = 0; j < r; ++j) {
      w[r - 2][j] = (j < r - 1) ? half : -half;
      w[r - 1][j] = half;
    }
  }
  return w;
}

/// omega_i^vee = 2 omega_i / <alpha_i, alpha_i>; dual to the simple roots.
inline std::vector<WeightVec> fundamental_coweights(const FamilyRank &fr) {
  auto w = fundamental_weights(fr);
  const auto s = simple_roots(fr);
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] *= Rational(2) / dot(s[i], s[i]);
  return w;
}

/// rho^vee = sum of the fundamental coweights.
inline WeightVec rho_vee(const FamilyRank &fr) {
  auto acc = WeightVec::zero(fr.rank());
  for (const auto &c : fundamental_coweights(fr))
    acc += c;
  return acc;
}

/// Coefficients c with nu = sum_i c_i alpha_i, computed as <nu, omega_i^vee>.
/// For family A, nu must have coordinate sum zero.
inline std::vector<Rational> simple_root_coordinates(const WeightVec &nu,
                                                     const FamilyRank &fr) {
  detail::require(nu.dim() == fr.rank(),
                  "weight length does not match the rank");
  if (fr.family() == Family::A)
    detail::require(nu.coordinate_sum() == Rational(0),
                    "type A: weight is outside the span of the roots "
                    "(nonzero coordinate sum)");
  const auto cow = fundamental_coweights(fr);
  const auto simple = simple_roots(fr);
  std::vector<Rational> c;
  c.reserve(cow.size());
  auto rebuilt = WeightVec::zero(fr.rank());
  for (std::size_t i = 0; i < cow.size(); ++i) {
    c.push_back(dot(nu, cow[i]));
    rebuilt += c.back() * simple[i];
  }
  detail::ensure(rebuilt == nu, "simple-root expansion does not reconstruct");
  return c;
}

/// Integer fast path of simple_root_coordinates for integral nu; returns
/// twice the coordinates so half-integers stay exact.
inline std::vector<std::int64_t>
doubled_simple_root_coordinates(const std::vector<int> &nu,
                                const FamilyRank &fr) {
  const int r = fr.rank();
  const int n = fr.index_count();
  std::vector<std::int64_t> c(static_cast<std::size_t>(n));
  std::int64_t prefix = 0;
  for (int i = 0; i < r; ++i) {
    prefix += nu[i];
    if (i < n)
      c[i] = 2 * prefix;
  }
  switch (fr.family()) {
  case Family::A:
    detail::require(prefix == 0, "type A: weight has nonzero coordinate sum");
    break;
  case Family::C:
    c[r - 1] = prefix;
    break;
  case Family::B:
    c[r - 1] = 2 * prefix;
    break;
  case Family::D:
    c[r - 2] = prefix - 2 * nu[r - 1];
    c[r - 1] = prefix;
    break;
  }
  return c;
}

/// Membership in the closed dominant chamber P+.
inline bool is_dominant(const WeightVec &nu, const FamilyRank &fr) {
  detail::require(nu.dim() == fr.rank(),
                  "weight length does not match the rank");
  const int r = fr.rank();
  for (int i = 0; i + 1 < r; ++i)
    if (nu[i] < nu[i + 1])
      return false;
  switch (fr.family()) {
  case Family::A:
    return true;
  case Family::C:
  case Family::B:
    return nu[r - 1] >= Rational(0);
  case Family::D: {
    const Rational last = nu[r - 1] < Rational(0) ? -nu[r - 1] : nu[r - 1];
    return nu[r - 2] >= last;
  }
  }
  return false;
}

inline bool is_dominant(const std::vector<int> &nu, Family f) {
  const std::size_t r = nu.size();
  for (std::size_t i = 0; i + 1 < r; ++i)
    if (nu[i] < nu[i + 1])
      return false;
  if (r == 0 || f == Family::A)
    return true;
  if (f == Family::D)
    return r < 2 || nu[r - 2] >= std::abs(nu[r - 1]);
  return nu[r - 1] >= 0;
}

namespace detail {

template <class T> T abs_value(const T &x) { return x < T(0) ? -x : x; }

/// Parity (+1/-1) of the permutation that sorts `v` into descending order.
template <class T> int sort_descending_with_parity(std::vector<T> &v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return v[b] < v[a]; });
  std::vector<bool> seen(n, false);
  int parity = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = idx[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0)
      parity = -parity;
  }
  std::vector<T> sorted;
  sorted.reserve(n);
  for (std::size_t i : idx)
    sorted.push_back(v[i]);
  v = std::move(sorted);
  return parity;
}

} // namespace detail

/// Moves `v` into the dominant chamber in place and returns det(w) of the
/// Weyl group element used, or 0 when v lies on a reflecting hyperplane.
/// W acts by permutations (A), signed permutations (C, B) and evenly signed
/// permutations (D).
template <class T> int reflect_to_dominant(std::vector<T> &v, Family f) {
  const std::size_t r = v.size();
  if (f == Family::A) {
    const int parity = detail::sort_descending_with_parity(v);
    for (std::size_t i = 0; i + 1 < r; ++i)
      if (v[i] == v[i + 1])
        return 0;
    return parity;
  }
  int flips = 0;
  bool has_zero = false;
  for (auto &x : v) {
    if (x < T(0)) {
      x = -x;
      ++flips;
    } else if (x == T(0)) {
      has_zero = true;
    }
  }
  const int parity = detail::sort_descending_with_parity(v);
  bool singular = false;
  for (std::size_t i = 0; i + 1 < r; ++i)
    if (v[i] == v[i + 1])
      singular = true;
  if (f == Family::D) {
    // Sign changes come in pairs; an odd leftover lands on the smallest entry
    // and is absorbed only when that entry is zero.
    if (flips % 2 == 1 && !has_zero && r > 0)
      v[r - 1] = -v[r - 1];
    return singular ? 0 : parity;
  }
  if (singular || has_zero)
    return 0;
  return (flips % 2 == 0) ? parity : -parity;
}

/// Dominant representative of the W-orbit of nu, with det(w) (0 if nu is
/// fixed by some reflection).
inline std::pair<WeightVec, int> reflect_to_dominant(const WeightVec &nu,
                                                     const FamilyRank &fr) {
  detail::require(nu.dim() == fr.rank(),
                  "weight length does not match the rank");
  auto coords = nu.coords();
  const int sign = reflect_to_dominant(coords, fr.family());
  return {WeightVec(std::move(coords)), sign};
}

/// Integer dominant representative only (no sign bookkeeping).
inline std::vector<int> dominant_representative(std::vector<int> v, Family f) {
  if (f == Family::A) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }
  int negatives = 0;
  bool has_zero = false;
  for (auto &x : v) {
    if (x < 0) {
      x = -x;
      ++negatives;
    } else if (x == 0) {
      has_zero = true;
    }
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  if (f == Family::D && negatives % 2 == 1 && !has_zero && !v.empty())
    v.back() = -v.back();
  return v;
}

/// Partition embedded at rank r, checked against the family's chamber.
inline std::vector<int> embed(const Partition &p, const FamilyRank &fr) {
  detail::require(p.length() <= fr.rank(),
                  "partition " + p.to_string() + " has more than r = " +
                      std::to_string(fr.rank()) + " parts");
  return p.padded(fr.rank());
}

struct IntWeightHash {
  std::size_t operator()(const std::vector<int> &v) const noexcept {
    std::size_t h = v.size();
    for (int x : v)
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    return h;
  }
};

} // namespace multgraph
