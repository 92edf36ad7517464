#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace multgraph {

/// Integer partition: strictly positive, weakly decreasing parts. The empty
/// list is the empty partition. Trailing zeros are stripped on construction.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
      parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      detail::require(parts_[i] > 0, "partition parts must be positive");
      detail::require(i == 0 || parts_[i - 1] >= parts_[i],
                      "partition parts must be weakly decreasing");
    }
  }

  const std::vector<int> &parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based); zero past the end.
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// Zero-padded coordinate vector of length r >= length().
  std::vector<int> padded(int r) const {
    detail::require(r >= length(), "partition longer than requested rank");
    std::vector<int> v(static_cast<std::size_t>(r), 0);
    std::copy(parts_.begin(), parts_.end(), v.begin());
    return v;
  }

  /// Strip trailing zeros of a nonnegative weakly decreasing vector.
  static Partition from_coords(const std::vector<int> &coords) {
    return Partition(coords);
  }

  std::string to_string() const {
    if (parts_.empty())
      return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition &, const Partition &) = default;
  friend auto operator<=>(const Partition &a, const Partition &b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
};

/// Canonical vertex order: larger size first, then reverse lexicographic on
/// the parts, so (4) < (3,1) < (2,2) < (2,1,1).
struct CanonicalLess {
  bool operator()(const Partition &a, const Partition &b) const {
    if (a.size() != b.size())
      return a.size() > b.size();
    return a.parts() > b.parts();
  }
};

/// All partitions of n, in canonical order.
inline std::vector<Partition> partitions_of(int n, int max_length = -1) {
  std::vector<Partition> out;
  if (n < 0)
    return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length)
      return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

} // namespace multgraph

template <> struct std::hash<multgraph::Partition> {
  std::size_t operator()(const multgraph::Partition &p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p.parts())
      h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};
