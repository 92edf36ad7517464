#pragma once

// Leveled multiplicative graphs: vertices (mu, n) with f_{n,mu} > 0, arrows
// (lambda, n) -> (mu, n+1) weighted by m_{lambda,mu}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "root_system.hpp"
#include "tensor.hpp"

namespace multgraph {

inline constexpr int default_max_depth = 8;

/// Provenance of an infinite-rank graph. Its data is evaluated at
/// `proxy_rank`, past every stabilization threshold the graph touches.
struct LimitSource {
  Family family;
  int proxy_rank;
  friend bool operator==(const LimitSource &, const LimitSource &) = default;
};

using GraphSource = std::variant<FamilyRank, LimitSource>;

struct Edge {
  Partition from;
  int level; ///< level of `from`; `to` sits on level + 1
  Partition to;
  std::uint64_t weight;
  friend bool operator==(const Edge &, const Edge &) = default;
};

class MultiplicativeGraph {
public:
  /// A contiguous block of edges leaving one vertex.
  struct Row {
    int level;
    Partition from;
    std::size_t begin, end;
  };

  MultiplicativeGraph(Partition delta, GraphSource source,
                      std::vector<std::vector<Partition>> levels,
                      std::vector<Edge> edges)
      : delta_(std::move(delta)), source_(std::move(source)),
        levels_(std::move(levels)), edges_(std::move(edges)) {
    canonicalize();
  }

  const Partition &delta() const { return delta_; }
  const GraphSource &source() const { return source_; }
  int depth() const { return static_cast<int>(levels_.size()); }

  /// Vertices of level n (1-based), canonically ordered.
  const std::vector<Partition> &level(int n) const { return levels_.at(n - 1); }
  const std::vector<std::vector<Partition>> &levels() const { return levels_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<Row> &rows() const { return rows_; }

  bool is_limit() const { return std::holds_alternative<LimitSource>(source_); }
  Family family() const {
    return is_limit() ? std::get<LimitSource>(source_).family
                      : std::get<FamilyRank>(source_).family();
  }
  /// The finite rank the data was computed at (proxy rank for limits).
  FamilyRank computation_rank() const {
    if (is_limit()) {
      const auto &ls = std::get<LimitSource>(source_);
      return FamilyRank(ls.family, ls.proxy_rank);
    }
    return std::get<FamilyRank>(source_);
  }

  bool has_vertex(const Partition &mu, int n) const {
    if (n < 1 || n > depth())
      return false;
    const auto &lv = levels_[n - 1];
    return std::binary_search(lv.begin(), lv.end(), mu, CanonicalLess{});
  }

  /// Edge index for (lambda, n) -> (mu, n+1), or npos.
  std::size_t find_edge(const Partition &lambda, int n,
                        const Partition &mu) const {
    for (const auto &row : rows_) {
      if (row.level != n || row.from != lambda)
        continue;
      for (std::size_t k = row.begin; k < row.end; ++k)
        if (edges_[k].to == mu)
          return k;
    }
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const MultiplicativeGraph &a,
                         const MultiplicativeGraph &b) {
    return a.delta_ == b.delta_ && a.source_ == b.source_ &&
           a.levels_ == b.levels_ && a.edges_ == b.edges_;
  }

private:
  void canonicalize() {
    for (auto &lv : levels_)
      std::sort(lv.begin(), lv.end(), CanonicalLess{});
    auto position = [&](const Partition &p, int n) {
      const auto &lv = levels_.at(n - 1);
      auto it = std::lower_bound(lv.begin(), lv.end(), p, CanonicalLess{});
      detail::ensure(it != lv.end() && *it == p,
                     "edge endpoint " + p.to_string() + " is not a vertex of level " +
                         std::to_string(n));
      return it - lv.begin();
    };
    for (const auto &e : edges_) {
      detail::ensure(e.level >= 1 && e.level < depth(), "edge level out of range");
      detail::ensure(e.weight > 0, "edge weights must be positive");
      position(e.from, e.level);
      position(e.to, e.level + 1);
    }
    std::sort(edges_.begin(), edges_.end(), [&](const Edge &a, const Edge &b) {
      if (a.level != b.level)
        return a.level < b.level;
      const auto fa = position(a.from, a.level), fb = position(b.from, b.level);
      if (fa != fb)
        return fa < fb;
      return position(a.to, a.level + 1) < position(b.to, b.level + 1);
    });
    rows_.clear();
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (rows_.empty() || rows_.back().level != edges_[k].level ||
          rows_.back().from != edges_[k].from)
        rows_.push_back({edges_[k].level, edges_[k].from, k, k + 1});
      else
        rows_.back().end = k + 1;
    }
  }

  Partition delta_;
  GraphSource source_;
  std::vector<std::vector<Partition>> levels_;
  std::vector<Edge> edges_;
  std::vector<Row> rows_;
};

namespace detail {

inline void check_depth(int depth, int max_depth) {
  require(depth >= 1, "depth must be positive");
  require(depth <= max_depth,
          "depth " + std::to_string(depth) + " exceeds the limit " +
              std::to_string(max_depth) + " (raise it explicitly to go deeper)");
}

inline MultiplicativeGraph assemble_graph(const Partition &delta,
                                          const FamilyRank &fr, int depth,
                                          GraphSource source) {
  const auto powers = iterated_power_multiplicities(delta, depth, fr);
  if (fr.family() == Family::D) {
    for (std::size_t n = 0; n < powers.size(); ++n)
      require(!powers[n].has_discards(),
              "family D at rank " + std::to_string(fr.rank()) +
                  " produces non-partition constituents at level " +
                  std::to_string(n + 1) + "; ranks above " +
                  std::to_string(depth * delta.length()) +
                  " avoid this at depth " + std::to_string(depth));
  }
  std::vector<std::vector<Partition>> levels;
  for (const auto &lv : powers) {
    std::vector<Partition> vs;
    for (const auto &[mu, f] : lv.entries)
      vs.push_back(mu);
    levels.push_back(std::move(vs));
  }
  std::vector<Edge> edges;
  for (int n = 1; n < depth; ++n)
    for (const auto &lambda : levels[n - 1])
      for (const auto &[mu, m] : tensor_decompose(lambda, delta, fr).entries)
        edges.push_back({lambda, n, mu, m});
  return MultiplicativeGraph(delta, std::move(source), std::move(levels),
                             std::move(edges));
}

} // namespace detail

/// G^(delta, g_r) truncated to levels 1..depth.
inline MultiplicativeGraph build_graph(const Partition &delta,
                                       const FamilyRank &fr, int depth,
                                       int max_depth = default_max_depth) {
  detail::require(!delta.empty(), "delta must be a nonzero partition");
  detail::require(delta.length() <= fr.rank(),
                  "rank must be at least l(delta) = " +
                      std::to_string(delta.length()));
  detail::check_depth(depth, max_depth);
  return detail::assemble_graph(delta, fr, depth, fr);
}

/// Rank at which every multiplicity of the depth-N limit graph has
/// stabilized: one past max(N l(delta), l(lambda)+l(delta)) over edge
/// sources, with l(lambda) <= (N-1) l(delta) on level N-1.
inline int limit_proxy_rank(const Partition &delta, int depth) {
  const int vertex_bound = depth * delta.length();
  const int edge_bound = (depth - 1) * delta.length() + delta.length();
  return std::max(vertex_bound, edge_bound) + 1;
}

/// G^(delta, X): the infinite-rank graph, levels 1..depth.
inline MultiplicativeGraph build_limit_graph(const Partition &delta, Family x,
                                             int depth,
                                             int max_depth = default_max_depth) {
  detail::require(!delta.empty(), "delta must be a nonzero partition");
  detail::check_depth(depth, max_depth);
  const int r = limit_proxy_rank(delta, depth);
  auto g = detail::assemble_graph(delta, FamilyRank(x, r), depth,
                                  LimitSource{x, r});
  // the longest edge source stays below r
  for (const auto &e : g.edges())
    detail::ensure(e.from.length() + delta.length() < r,
                   "limit proxy rank below the stabilization threshold");
  return g;
}

/// Whether level n is exactly {lambda : |lambda| <= n, |lambda| = n mod 2}
/// (capped at r parts for finite ranks) for every level.
inline bool pascalization_check(const MultiplicativeGraph &g) {
  detail::require(g.delta() == Partition{1},
                  "the Pascalization rule concerns delta = (1)");
  const int cap = g.is_limit() ? -1 : g.computation_rank().rank();
  for (int n = 1; n <= g.depth(); ++n) {
    std::vector<Partition> expected;
    for (int k = n; k >= 0; k -= 2)
      for (auto &p : partitions_of(k, cap))
        expected.push_back(std::move(p));
    std::sort(expected.begin(), expected.end(), CanonicalLess{});
    if (expected != g.level(n))
      return false;
  }
  return true;
}

} // namespace multgraph
