#pragma once

// The acceptance suite: ten criteria, each printed as one PASS/FAIL line.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "kernel.hpp"
#include "partition.hpp"
#include "root_system.hpp"
#include "sampling.hpp"
#include "sweep.hpp"
#include "tableaux.hpp"
#include "tensor.hpp"
#include "theta.hpp"

namespace multgraph {

struct CriterionResult {
  int id;
  std::string title;
  bool pass;
  std::string detail;
  double seconds;
  double time_limit;
};

struct AcceptanceOptions {
  std::string golden_trajectory; ///< path of the seed-42 golden file
  int only = 0;                  ///< run a single criterion when nonzero
};

namespace acceptance {

/// Collects failure messages; the first few are kept for the report.
class Checker {
public:
  void fail(const std::string &msg) {
    if (failures_++ < 5)
      notes_.push_back(msg);
  }
  void expect(bool ok, const std::string &msg) {
    ++checks_;
    if (!ok)
      fail(msg);
  }
  /// Shown ahead of the failures; not counted.
  void note(const std::string &msg) { notes_.insert(notes_.begin(), msg); }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failures_) {
      os << ", " << failures_ << " failed";
      for (const auto &n : notes_)
        os << "; " << n;
    }
    return os.str();
  }

private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> notes_;
};

inline std::string fr_name(Family f, int r) {
  return std::string(1, family_letter(f)) + std::to_string(r);
}

inline Checker criterion_1() {
  Checker c;
  const FamilyRank b3(Family::B, 3);
  const Partition delta{2};
  c.expect(tensor_decompose(Partition{3, 1}, delta, b3)
                   .multiplicity(Partition{3, 1}) == 2,
           "m_{(3,1),(3,1)} != 2");
  const auto f = iterated_power_multiplicities(delta, 2, b3);
  c.expect(f[1].multiplicity(Partition{2, 1, 1}) == 0, "f_2 of (2,1,1) != 0");
  return c;
}

inline Checker criterion_2() {
  Checker c;
  const auto g = build_graph(Partition{1}, FamilyRank(Family::A, 2), 4);
  const std::vector<std::vector<Partition>> expected{
      {{1}}, {{2}, {1, 1}}, {{3}, {2, 1}}, {{4}, {3, 1}, {2, 2}}};
  c.expect(g.levels() == expected, "gl2 levels differ from the figure");
  for (const auto &e : g.edges())
    c.expect(e.weight == 1, "gl2 edge of weight " + std::to_string(e.weight));
  const auto sp = build_graph(Partition{1}, FamilyRank(Family::C, 2), 3);
  for (const auto &p : {Partition{3}, Partition{1}, Partition{2, 1}})
    c.expect(sp.has_vertex(p, 3), "sp4 level 3 lacks " + p.to_string());
  return c;
}

inline Checker criterion_3() {
  Checker c;
  for (const auto &lambda :
       {Partition{1}, Partition{2}, Partition{2, 1}, Partition{3, 1}})
    for (int r = lambda.length() + 1; r <= 6; ++r)
      for (double b : {0.3, 0.5, 0.9}) {
        const double s =
            specialize_S(lambda, ThetaSpec::constant(b), FamilyRank(Family::A, r));
        const double p = principal_specialization_A(lambda, b, r);
        c.expect(std::abs(s - p) <= 1e-12 * p,
                 lambda.to_string() + " r=" + std::to_string(r) +
                     " b=" + format_number(b));
      }
  return c;
}

inline Checker criterion_4() {
  Checker c;
  const std::vector<ThetaSpec> thetas{ThetaSpec::constant(0.3),
                                      ThetaSpec::constant(0.9),
                                      ThetaSpec::geometric(0.5, 0.8)};
  for (Family f : all_families)
    for (const auto &delta : {Partition{1}, Partition{2}, Partition{1, 1}})
      for (int r = 3; r <= 5; ++r)
        for (const auto &theta : thetas) {
          const std::string where = fr_name(f, r) + " delta=" +
                                    delta.to_string() + " " + theta.to_string();
          try {
            const auto k =
                transition_kernel(build_graph(delta, FamilyRank(f, r), 4), theta);
            bool rows_ok = true;
            for (double s : k.row_sums)
              rows_ok = rows_ok && std::abs(s - 1) <= finite_row_tolerance;
            c.expect(rows_ok, where);
          } catch (const std::exception &ex) {
            c.expect(false, where + ": " + ex.what());
          }
        }
  return c;
}

inline Checker criterion_5() {
  Checker c;
  for (Family f : all_families)
    for (const auto &delta : {Partition{1}, Partition{2}, Partition{1, 1}})
      for (int n = 1; n <= 3; ++n) {
        const int r0 = std::max(n * delta.length(), f == Family::D ? 2 : 1);
        for (int r = r0; r <= r0 + 1; ++r) {
          const auto lo = iterated_power_multiplicities(delta, n, FamilyRank(f, r));
          const auto hi =
              iterated_power_multiplicities(delta, n, FamilyRank(f, r + 1));
          c.expect(lo.back().entries == hi.back().entries,
                   "f_" + std::to_string(n) + " for delta=" + delta.to_string() +
                       " differs between " + fr_name(f, r) + " and " +
                       fr_name(f, r + 1));
        }
      }

  std::vector<Partition> small;
  for (int k = 0; k <= 3; ++k)
    for (auto &p : partitions_of(k))
      small.push_back(std::move(p));
  SplitMix64 rng(2024);
  auto pick = [&](std::size_t from) {
    return small[from + rng.next() % (small.size() - from)];
  };
  for (int trial = 0; trial < 30; ++trial) {
    const Partition lambda = pick(0);
    const Partition delta = pick(1); // skip the empty partition
    for (Family f : all_families) {
      const int r0 = stable_rank(lambda, delta, f);
      for (int r = r0; r <= r0 + 1; ++r)
        c.expect(tensor_decompose(lambda, delta, FamilyRank(f, r)).entries ==
                     tensor_decompose(lambda, delta, FamilyRank(f, r + 1)).entries,
                 "m for " + lambda.to_string() + " (x) " + delta.to_string() +
                     " differs between " + fr_name(f, r) + " and " +
                     fr_name(f, r + 1));
    }
  }
  return c;
}

inline Checker criterion_6() {
  Checker c;
  int beyond_stated = 0, beyond_r_minus_l = 0;
  for (Family f : {Family::C, Family::B, Family::D})
    for (int k = 0; k <= 4; ++k)
      for (const auto &lambda : partitions_of(k))
        for (int r = std::max({lambda.length(), 1, f == Family::D ? 2 : 1}); r <= 8;
             ++r)
          for (double b : {0.3, 0.6}) {
            const FamilyRank fr(f, r);
            const auto theta = ThetaSpec::constant(b);
            const std::string where = "lambda=" + partition_label(lambda) + " " +
                                      fr.to_string() + " b=" + format_number(b);
            try {
              const auto d = defect_and_bound(lambda, theta, fr);
              c.expect(d.defect >= 0 && d.defect <= d.bound, where + " out of bounds");
              if (!lambda.empty())
                c.expect(d.defect > 0, where + " has zero defect");
            } catch (const NumericalConsistencyError &ex) {
              c.expect(false, where + ": " + ex.what());
              ++beyond_stated;
              // the weaker exponent r - l, for the report only
              const double defect = specialize_S(lambda, theta, fr) -
                                    specialize_S(lambda, theta, FamilyRank(Family::A, r));
              if (defect > std::pow(b, r - lambda.length()) *
                               std::pow(static_cast<double>(fr.defining_dimension()), k) *
                               (1 + 1e-12))
                ++beyond_r_minus_l;
            }
          }
  if (beyond_stated)
    c.note(std::to_string(beyond_stated) + " cases exceed the stated bound; " +
           std::to_string(beyond_r_minus_l) +
           " of them exceed b^{r-l} (dim V(box))^{|lambda|}");
  return c;
}

inline constexpr double sweep_limit_tolerance = 1e-12;

inline Checker criterion_7() {
  Checker c;
  const double b = 0.5;
  const auto theta = ThetaSpec::constant(b);
  const Partition one{1};
  for (Family f : {Family::C, Family::B, Family::D}) {
    for (const auto &mu : {Partition{2}, Partition{1, 1}}) {
      const auto rows =
          convergence_sweep(one, one, mu, f, theta, 10, 30, sweep_limit_tolerance);
      const std::string where =
          std::string(1, family_letter(f)) + " mu=" + mu.to_string();
      c.expect(rows.back().gap < 1e-6, where + " gap at r=30 is " +
                                           format_number(rows.back().gap));
      for (std::size_t k = 1; k < rows.size(); ++k)
        c.expect(rows[k].gap <= rows[k - 1].gap + 1e-15,
                 where + " gap grows at r=" + std::to_string(rows[k].rank));
    }
    const auto vanish = convergence_sweep(one, one, Partition{}, f, theta, 30, 30,
                                          sweep_limit_tolerance);
    c.expect(vanish.back().pi_r < 1e-6 && vanish.back().pi_limit == 0,
             std::string(1, family_letter(f)) + " vanishing edge at r=30 is " +
                 format_number(vanish.back().pi_r));

    const auto k = limit_kernel(build_limit_graph(one, f, 2), theta,
                                sweep_limit_tolerance);
    c.expect(std::abs(k.probability(one, 1, Partition{2}) - 1 / (1 + b)) < 1e-9,
             "limit P((1)->(2)) misses 1/(1+b)");
    c.expect(std::abs(k.probability(one, 1, Partition{1, 1}) - b / (1 + b)) < 1e-9,
             "limit P((1)->(1,1)) misses b/(1+b)");
  }
  return c;
}

inline Checker criterion_8() {
  Checker c;
  const auto theta = ThetaSpec::geometric(0.5, 0.8);
  for (const auto &delta : {Partition{1}, Partition{2}}) {
    std::map<Family, TransitionKernel> kernels;
    for (Family f : all_families)
      kernels.emplace(f, limit_kernel(build_limit_graph(delta, f, 3), theta));
    const auto &a = kernels.at(Family::A);
    for (const auto &[f, k] : kernels) {
      for (std::size_t e = 0; e < k.graph.edges().size(); ++e) {
        const auto &edge = k.graph.edges()[e];
        const bool top = edge.to.size() == edge.from.size() + delta.size();
        if (top)
          c.expect(edge.weight == lr_coefficient(edge.from, delta, edge.to),
                   std::string(1, family_letter(f)) + " edge " +
                       edge.from.to_string() + " -> " + edge.to.to_string() +
                       " disagrees with the LR coefficient");
        if (!a.graph.has_vertex(edge.from, edge.level))
          continue;
        c.expect(std::abs(k.probabilities[e] -
                          a.probability(edge.from, edge.level, edge.to)) <= 1e-9,
                 std::string(1, family_letter(f)) + " kernel differs from A at " +
                     edge.from.to_string() + " -> " + edge.to.to_string());
      }
    }
  }
  return c;
}

inline Checker criterion_9() {
  Checker c;
  for (int r = 1; r <= 4; ++r)
    for (int k = 0; k <= 6; ++k)
      for (const auto &lambda : partitions_of(k, r))
        c.expect(weight_multiplicities(lambda, FamilyRank(Family::A, r)).expanded() ==
                     ssyt_character(lambda, r),
                 lambda.to_string() + " at r=" + std::to_string(r));
  return c;
}

inline Checker criterion_10(const AcceptanceOptions &opt) {
  Checker c;
  const double b = 0.5;
  const auto theta = ThetaSpec::constant(b);
  const Partition one{1};
  TrajectorySampler sampler(one, Family::A, theta);
  const auto row = sampler.row(one);
  SplitMix64 rng(7);
  const int draws = 100000;
  std::map<Partition, int> seen;
  for (int i = 0; i < draws; ++i)
    ++seen[sampler.step(one, rng)];
  for (std::size_t k = 0; k < row.targets.size(); ++k) {
    const double p = row.probabilities[k] / row.sum;
    const double freq = static_cast<double>(seen[row.targets[k]]) / draws;
    const double se = std::sqrt(p * (1 - p) / draws);
    c.expect(std::abs(freq - p) <= 4 * se,
             "frequency of " + row.targets[k].to_string() + " is " +
                 format_number(freq) + " against " + format_number(p));
  }

  std::ostringstream path;
  write_trajectory(path, sample_trajectory(one, Family::A, theta, 5, 42));
  std::ifstream in(opt.golden_trajectory, std::ios::binary);
  if (!in) {
    c.expect(false, "cannot read golden file '" + opt.golden_trajectory + "'");
  } else {
    std::ostringstream golden;
    golden << in.rdbuf();
    c.expect(golden.str() == path.str(), "trajectory differs from the golden file");
  }
  return c;
}

} // namespace acceptance

/// Runs the criteria and prints one line per criterion. Returns true iff all
/// selected criteria pass.
inline bool run_acceptance(std::ostream &os, const AcceptanceOptions &opt,
                           std::vector<CriterionResult> *results = nullptr) {
  struct Spec {
    int id;
    const char *title;
    double limit;
    std::function<acceptance::Checker()> run;
  };
  const std::vector<Spec> specs{
      {1, "so7 example: m_{(3,1),(3,1)} = 2, f_2(2,1,1) = 0", 1,
       acceptance::criterion_1},
      {2, "gl2 and sp4 example graphs", 1, acceptance::criterion_2},
      {3, "closed product vs Freudenthal specialization", 5,
       acceptance::criterion_3},
      {4, "finite-rank row stochasticity", 120, acceptance::criterion_4},
      {5, "rank stabilization of f and m", 120, acceptance::criterion_5},
      {6, "defect bounds for C, B, D", 60, acceptance::criterion_6},
      {7, "finite-rank kernels converge to the limit kernel", 120,
       acceptance::criterion_7},
      {8, "limit kernels agree across types; LR multiplicities", 120,
       acceptance::criterion_8},
      {9, "Freudenthal vs semistandard tableaux", 30, acceptance::criterion_9},
      {10, "sampling frequencies and golden trajectory", 30,
       [&opt] { return acceptance::criterion_10(opt); }},
  };
  bool all = true;
  for (const auto &s : specs) {
    if (opt.only && opt.only != s.id)
      continue;
    const auto t0 = std::chrono::steady_clock::now();
    acceptance::Checker c;
    try {
      c = s.run();
    } catch (const std::exception &ex) {
      c.fail(std::string("exception: ") + ex.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < s.limit;
    const bool pass = c.ok() && in_time;
    std::string detail = c.summary();
    if (!in_time)
      detail += "; exceeded " + format_number(s.limit) + " s";
    all = all && pass;
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2f", secs);
    os << (pass ? "PASS" : "FAIL") << " [" << s.id << "] " << s.title << " ("
       << time_buf << " s): " << detail << '\n';
    if (results)
      results->push_back({s.id, s.title, pass, detail, secs, s.limit});
  }
  return all;
}

} // namespace multgraph
