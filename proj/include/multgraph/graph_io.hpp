#pragma once

// JSON, DOT and CSV writers for graphs, kernels, sweeps and trajectories.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "format.hpp"
#include "graph.hpp"
#include "kernel.hpp"
#include "partition.hpp"
#include "root_system.hpp"
#include "sweep.hpp"

namespace multgraph {

using json = nlohmann::ordered_json;

inline json source_to_json(const GraphSource &source) {
  if (const auto *fr = std::get_if<FamilyRank>(&source))
    return {{"family", std::string(1, family_letter(fr->family()))},
            {"rank", fr->rank()}};
  const auto &ls = std::get<LimitSource>(source);
  return {{"family", std::string(1, family_letter(ls.family))}, {"limit", true}};
}

inline json graph_to_json(const MultiplicativeGraph &g) {
  json levels = json::array();
  for (const auto &lv : g.levels()) {
    json row = json::array();
    for (const auto &p : lv)
      row.push_back(p.parts());
    levels.push_back(std::move(row));
  }
  json edges = json::array();
  for (const auto &e : g.edges())
    edges.push_back({{"from", e.from.parts()},
                     {"n", e.level},
                     {"to", e.to.parts()},
                     {"m", e.weight}});
  return {{"delta", g.delta().parts()},
          {"source", source_to_json(g.source())},
          {"depth", g.depth()},
          {"levels", std::move(levels)},
          {"edges", std::move(edges)}};
}

inline MultiplicativeGraph graph_from_json(const json &j) {
  try {
    const Partition delta(j.at("delta").get<std::vector<int>>());
    const int depth = j.at("depth").get<int>();
    const auto &src = j.at("source");
    const Family fam = parse_family(src.at("family").get<std::string>());
    GraphSource source =
        src.value("limit", false)
            ? GraphSource(LimitSource{fam, limit_proxy_rank(delta, depth)})
            : GraphSource(FamilyRank(fam, src.at("rank").get<int>()));
    std::vector<std::vector<Partition>> levels;
    for (const auto &lv : j.at("levels")) {
      std::vector<Partition> row;
      for (const auto &p : lv)
        row.emplace_back(p.get<std::vector<int>>());
      levels.push_back(std::move(row));
    }
    detail::require(static_cast<int>(levels.size()) == depth,
                    "depth disagrees with the number of levels");
    std::vector<Edge> edges;
    for (const auto &e : j.at("edges"))
      edges.push_back({Partition(e.at("from").get<std::vector<int>>()),
                       e.at("n").get<int>(),
                       Partition(e.at("to").get<std::vector<int>>()),
                       e.at("m").get<std::uint64_t>()});
    return MultiplicativeGraph(delta, std::move(source), std::move(levels),
                               std::move(edges));
  } catch (const json::exception &ex) {
    throw DomainError(std::string("malformed graph JSON: ") + ex.what());
  }
}

/// Graph schema with "p" on every edge.
inline json kernel_to_json(const TransitionKernel &k) {
  json j = graph_to_json(k.graph);
  j["theta"] = k.theta.to_string();
  auto &edges = j["edges"];
  for (std::size_t e = 0; e < edges.size(); ++e)
    edges[e]["p"] = round_significant(k.probabilities[e]);
  return j;
}

inline std::string dot_node(const Partition &p, int level) {
  return "\"" + std::to_string(level) + ":" + p.to_string() + "\"";
}

/// One subgraph per level; edges labelled by multiplicity.
inline void write_dot(std::ostream &os, const MultiplicativeGraph &g) {
  os << "digraph G {\n  rankdir=TB;\n";
  for (int n = 1; n <= g.depth(); ++n) {
    os << "  subgraph level_" << n << " {\n    rank=same;\n";
    for (const auto &p : g.level(n))
      os << "    " << dot_node(p, n) << " [label=\"" << partition_label(p)
         << "\"];\n";
    os << "  }\n";
  }
  for (const auto &e : g.edges())
    os << "  " << dot_node(e.from, e.level) << " -> "
       << dot_node(e.to, e.level + 1) << " [label=\"" << e.weight << "\"];\n";
  os << "}\n";
}

inline void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows) {
  os << "r,pi_r,pi_limit,gap\n";
  for (const auto &r : rows)
    os << r.rank << ',' << format_number(r.pi_r) << ','
       << format_number(r.pi_limit) << ',' << format_number(r.gap) << '\n';
}

/// One vertex per line, "n<TAB>partition".
inline void write_trajectory(std::ostream &os,
                             const std::vector<Partition> &path) {
  for (std::size_t n = 0; n < path.size(); ++n)
    os << n + 1 << '\t' << path[n].to_string() << '\n';
}

} // namespace multgraph
