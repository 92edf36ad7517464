#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <multgraph/graph.hpp>
#include <multgraph/kernel.hpp>
#include <multgraph/sweep.hpp>

using namespace multgraph;

namespace {

const FamilyRank A2(Family::A, 2);

} // namespace

TEST(Theta, ParsesAllForms) {
  const auto c = ThetaSpec::parse("const:0.5");
  EXPECT_EQ(c(1), 0.5);
  EXPECT_EQ(c(7), 0.5);
  const auto g = ThetaSpec::parse("geom:0.5,0.8");
  EXPECT_DOUBLE_EQ(g(3), 0.5 * 0.8 * 0.8);
  EXPECT_EQ(g.sup(), 0.5);
  const auto l = ThetaSpec::parse("list:0.5,0.4;tail=0.3");
  EXPECT_EQ(l.first(4), (std::vector<double>{0.5, 0.4, 0.3, 0.3}));
  EXPECT_EQ(l.sup(), 0.5);
  EXPECT_EQ(l.to_string(), "list:0.5,0.4;tail=0.3");
  EXPECT_TRUE(std::isinf(ThetaSpec::geometric(0.1, 1.5).sup()));
  for (const char *bad : {"0.5", "const:-1", "const:0", "geom:0.5", "list:0.5",
                          "const:abc", "poly:1"})
    EXPECT_THROW(ThetaSpec::parse(bad), DomainError) << bad;
}

TEST(ThetaExponent, Examples) {
  const auto b = ThetaSpec::constant(0.5);
  EXPECT_EQ(theta_exponent(WeightVec({0, 0}), b, FamilyRank(Family::C, 2)), 1.0);
  EXPECT_EQ(theta_exponent(WeightVec({1, -1}), b, A2), 0.5);
  const auto t = ThetaSpec::constant(0.7);
  EXPECT_DOUBLE_EQ(theta_exponent(WeightVec({1, 0, 0}), t, FamilyRank(Family::B, 3)),
                   0.7 * 0.7 * 0.7);
  EXPECT_THROW(theta_exponent(WeightVec({1, 0}), b, A2), DomainError);
}

TEST(SpecializeS, Examples) {
  for (double b : {0.2, 0.5, 3.0}) {
    const auto t = ThetaSpec::constant(b);
    EXPECT_DOUBLE_EQ(specialize_S(Partition{1}, t, A2), 1 + b);
    EXPECT_DOUBLE_EQ(specialize_S(Partition{1}, t, FamilyRank(Family::C, 1)), 1 + b);
    for (Family f : all_families)
      EXPECT_EQ(specialize_S(Partition{}, t, FamilyRank(f, 3)), 1.0);
  }
}

// Brute force: sum over every weight of V(lambda) of theta^[lambda - w].
TEST(SpecializeS, MatchesWeightByWeightSum) {
  const auto theta = ThetaSpec::parse("list:0.3,0.9,0.6;tail=0.45");
  for (Family f : all_families)
    for (int r = f == Family::D ? 2 : 1; r <= 4; ++r)
      for (int k = 0; k <= 3; ++k)
        for (const auto &lambda : partitions_of(k, r)) {
          const FamilyRank fr(f, r);
          const WeightVec top = WeightVec::from_partition(lambda, r);
          double sum = 0;
          weight_multiplicities(lambda, fr).for_each_weight(
              [&](const IntWeight &w, std::uint64_t m) {
                sum += m * theta_exponent(top - WeightVec(w), theta, fr);
              });
          EXPECT_NEAR(specialize_S(lambda, theta, fr), sum, 1e-12 * sum)
              << lambda.to_string() << " " << fr.to_string();
        }
}

TEST(PrincipalSpecialization, ExamplesAndErrors) {
  for (double b : {0.3, 0.5}) {
    EXPECT_DOUBLE_EQ(principal_specialization_A(Partition{1}, b, 2), 1 + b);
    EXPECT_DOUBLE_EQ(principal_specialization_A(Partition{1}, b, 3), 1 + b + b * b);
    EXPECT_EQ(principal_specialization_A(Partition{}, b, 3), 1.0);
  }
  EXPECT_THROW(principal_specialization_A(Partition{1, 1}, 0.5, 2), DomainError);
  EXPECT_THROW(principal_specialization_A(Partition{1}, 1.0, 2), DomainError);
}

TEST(PrincipalSpecialization, AgreesWithCharacterSum) {
  for (const auto &lambda : {Partition{1}, Partition{2}, Partition{2, 1}, Partition{3, 1}})
    for (int r = lambda.length() + 1; r <= 6; ++r)
      for (double b : {0.3, 0.5, 0.9}) {
        const double p = principal_specialization_A(lambda, b, r);
        EXPECT_NEAR(specialize_S(lambda, ThetaSpec::constant(b), FamilyRank(Family::A, r)),
                    p, 1e-12 * p);
      }
}

TEST(SpecializeS, TypeAIncreasesWithRank) {
  std::mt19937 gen(17);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  std::uniform_int_distribution<int> size(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto shapes = partitions_of(size(gen));
    const Partition lambda = shapes[gen() % shapes.size()];
    const auto theta = ThetaSpec::geometric(unit(gen), unit(gen) + 0.5);
    double prev = 0;
    for (int r = std::max(lambda.length(), 1); r <= lambda.length() + 10; ++r) {
      const double s = specialize_S(lambda, theta, FamilyRank(Family::A, r));
      EXPECT_GE(s, prev * (1 - 1e-14));
      prev = s;
    }
  }
}

TEST(LimitS, BranchingMatchesCharacterSum) {
  for (const auto &theta : {ThetaSpec::constant(0.4), ThetaSpec::geometric(0.7, 0.9),
                            ThetaSpec::parse("list:0.2,0.8,0.5;tail=0.6")})
    for (int k = 0; k <= 5; ++k)
      for (const auto &lambda : partitions_of(k)) {
        const auto seq = type_a_specializations(lambda, theta, 7);
        for (int r = 1; r <= 7; ++r) {
          if (r < lambda.length()) {
            EXPECT_EQ(seq[r - 1], 0.0);
            continue;
          }
          const double s = specialize_S(lambda, theta, FamilyRank(Family::A, r));
          EXPECT_NEAR(seq[r - 1], s, 1e-12 * s) << lambda.to_string() << " r=" << r;
        }
      }
}

TEST(LimitS, ClosedForms) {
  for (double b : {0.3, 0.5, 0.8}) {
    const auto t = ThetaSpec::constant(b);
    const auto one = limit_S_A(Partition{1}, t, 1e-13);
    EXPECT_NEAR(one.value, 1 / (1 - b), 1e-10);
    EXPECT_NEAR(limit_S_A(Partition{2}, t, 1e-13).value, 1 / ((1 - b) * (1 - b * b)),
                1e-10);
    EXPECT_EQ(limit_S_A(Partition{}, t).value, 1.0);
  }
  EXPECT_THROW(limit_S_A(Partition{1}, ThetaSpec::constant(1.0)), DomainError);
  EXPECT_THROW(limit_S_A(Partition{2}, ThetaSpec::constant(0.99), 1e-10, 50),
               NumericalConsistencyError);
}

TEST(Defect, Examples) {
  EXPECT_EQ(defect_and_bound(Partition{}, ThetaSpec::constant(0.5), FamilyRank(Family::C, 3))
                .defect,
            0.0);
  const double b = 0.4;
  const auto c1 = defect_and_bound(Partition{1}, ThetaSpec::constant(b), FamilyRank(Family::C, 1));
  EXPECT_DOUBLE_EQ(c1.defect, b);
  EXPECT_DOUBLE_EQ(c1.bound, 2 * b);
  const auto b3 = defect_and_bound(Partition{1}, ThetaSpec::constant(0.5), FamilyRank(Family::B, 3));
  EXPECT_GT(b3.defect, 0);
  EXPECT_DOUBLE_EQ(b3.bound, 1.75);
  EXPECT_THROW(defect_and_bound(Partition{1}, ThetaSpec::constant(0.5), A2), DomainError);
}

TEST(Defect, WithinBoundForCAndB) {
  for (Family f : {Family::C, Family::B})
    for (int k = 0; k <= 4; ++k)
      for (const auto &lambda : partitions_of(k))
        for (int r = std::max(lambda.length(), 1); r <= 8; ++r)
          for (double b : {0.3, 0.6}) {
            const auto d = defect_and_bound(lambda, ThetaSpec::constant(b), FamilyRank(f, r));
            EXPECT_GE(d.defect, 0);
            EXPECT_LE(d.defect, d.bound);
            if (k > 0)
              EXPECT_GT(d.defect, 0);
          }
}

// For D the weight -e_r of V(1) alone contributes b^{r-1}, above b^{r+1} 2r
// at small r; the exponent r - l does hold.
TEST(Defect, FamilyD) {
  EXPECT_THROW(defect_and_bound(Partition{1}, ThetaSpec::constant(0.3),
                                FamilyRank(Family::D, 2)),
               NumericalConsistencyError);
  for (int k = 0; k <= 4; ++k)
    for (const auto &lambda : partitions_of(k))
      for (int r = std::max(lambda.length(), 2); r <= 8; ++r)
        for (double b : {0.3, 0.6}) {
          const auto t = ThetaSpec::constant(b);
          const double defect = specialize_S(lambda, t, FamilyRank(Family::D, r)) -
                                specialize_S(lambda, t, FamilyRank(Family::A, r));
          EXPECT_GE(defect, 0);
          EXPECT_LE(defect, std::pow(b, r - lambda.length()) * std::pow(2.0 * r, k) *
                                (1 + 1e-12));
          if (k > 0)
            EXPECT_GT(defect, 0);
        }
}

TEST(Kernel, PieriRowOfGl2) {
  const double b = 0.35;
  const auto t = ThetaSpec::constant(b);
  const auto k = transition_kernel(build_graph(Partition{1}, A2, 2), t);
  const double s1 = specialize_S(Partition{1}, t, A2);
  const double s2 = specialize_S(Partition{2}, t, A2);
  const double s11 = specialize_S(Partition{1, 1}, t, A2);
  EXPECT_NEAR(s1 * s1, s2 + b * s11, 1e-14);
  EXPECT_NEAR(k.probability(Partition{1}, 1, Partition{2}), s2 / (s1 * s1), 1e-15);
  EXPECT_NEAR(k.probability(Partition{1}, 1, Partition{1, 1}), b * s11 / (s1 * s1), 1e-15);
  EXPECT_EQ(k.probability(Partition{1}, 1, Partition{}), 0.0);
}

TEST(Kernel, SingleEdgeRowsHaveProbabilityOne) {
  const auto k = transition_kernel(build_graph(Partition{1}, FamilyRank(Family::A, 1), 4),
                                   ThetaSpec::constant(0.5));
  for (double p : k.probabilities)
    EXPECT_NEAR(p, 1.0, 1e-12);
}

TEST(Kernel, WeightTwoArrowOfSo7) {
  const auto t = ThetaSpec::constant(0.5);
  const FamilyRank b3(Family::B, 3);
  const auto k = transition_kernel(build_graph(Partition{2}, b3, 3), t);
  const Partition p{3, 1};
  const double expected = 2 * specialize_S(p, t, b3) /
                          (specialize_S(p, t, b3) * specialize_S(Partition{2}, t, b3)) *
                          theta_exponent(WeightVec({2, 0, 0}), t, b3);
  EXPECT_NEAR(k.probability(p, 2, p), expected, 1e-14);
}

TEST(Kernel, RowsAreStochastic) {
  const std::vector<ThetaSpec> thetas{ThetaSpec::constant(0.3), ThetaSpec::constant(0.9),
                                      ThetaSpec::geometric(0.5, 0.8),
                                      ThetaSpec::constant(2.5)};
  for (Family f : all_families)
    for (const auto &delta : {Partition{1}, Partition{2}, Partition{1, 1}})
      for (int r = 3; r <= 5; ++r) {
        if (f == Family::D && 4 * delta.length() >= r)
          continue;
        const auto g = build_graph(delta, FamilyRank(f, r), 4);
        for (const auto &t : thetas) {
          const auto k = transition_kernel(g, t);
          for (double s : k.row_sums)
            EXPECT_NEAR(s, 1.0, 1e-9);
          for (double p : k.probabilities)
            EXPECT_GT(p, 0);
        }
      }
}

TEST(Kernel, ExponentsStabilizeOrVanish) {
  const auto t = ThetaSpec::constant(0.5);
  const Partition lambda{2, 1}, delta{1};
  for (Family f : {Family::C, Family::B, Family::D}) {
    for (const auto &mu : {Partition{3, 1}, Partition{2, 1, 1}}) {
      std::vector<Rational> first;
      for (int r = 4; r <= 12; ++r) {
        const FamilyRank fr(f, r);
        WeightVec nu = WeightVec::from_partition(lambda, r) +
                       WeightVec::from_partition(delta, r) -
                       WeightVec::from_partition(mu, r);
        auto c = simple_root_coordinates(nu, fr);
        while (!c.empty() && c.back() == Rational(0))
          c.pop_back();
        if (first.empty())
          first = c;
        EXPECT_EQ(c, first) << fr.to_string();
      }
    }
    for (const auto &mu : {Partition{2}, Partition{1, 1}}) {
      double prev = 2;
      for (int r = 3; r <= 40; ++r) {
        const FamilyRank fr(f, r);
        const double v = theta_exponent(WeightVec::from_partition(lambda, r) +
                                            WeightVec::from_partition(delta, r) -
                                            WeightVec::from_partition(mu, r),
                                        t, fr);
        EXPECT_LT(v, prev);
        prev = v;
      }
      EXPECT_LT(prev, 1e-8);
    }
  }
}

TEST(LimitKernel, ClosedFormsAndVanishing) {
  const double b = 0.5;
  const auto t = ThetaSpec::constant(b);
  const auto k = limit_kernel(build_limit_graph(Partition{1}, Family::C, 2), t, 1e-13);
  EXPECT_NEAR(k.probability(Partition{1}, 1, Partition{2}), 1 / (1 + b), 1e-10);
  EXPECT_NEAR(k.probability(Partition{1}, 1, Partition{1, 1}), b / (1 + b), 1e-10);
  EXPECT_EQ(k.probability(Partition{1}, 1, Partition{}), 0.0);
  EXPECT_THROW(limit_kernel(build_limit_graph(Partition{1}, Family::C, 2),
                            ThetaSpec::constant(1.2)),
               DomainError);
  EXPECT_THROW(limit_kernel(build_graph(Partition{1}, A2, 2), t), DomainError);
}

TEST(LimitKernel, IndependentOfType) {
  const auto t = ThetaSpec::geometric(0.5, 0.8);
  for (const auto &delta : {Partition{1}, Partition{2}}) {
    const auto a = limit_kernel(build_limit_graph(delta, Family::A, 3), t);
    for (Family f : {Family::C, Family::B, Family::D}) {
      const auto k = limit_kernel(build_limit_graph(delta, f, 3), t);
      for (std::size_t e = 0; e < k.graph.edges().size(); ++e) {
        const auto &edge = k.graph.edges()[e];
        if (a.graph.has_vertex(edge.from, edge.level))
          EXPECT_NEAR(k.probabilities[e], a.probability(edge.from, edge.level, edge.to),
                      1e-9);
      }
      for (double s : k.row_sums)
        EXPECT_NEAR(s, 1.0, 1e-6);
    }
  }
}

TEST(Sweep, ConvergesForEveryFamily) {
  const auto t = ThetaSpec::constant(0.5);
  for (Family f : {Family::C, Family::B, Family::D}) {
    const auto rows = convergence_sweep(Partition{1}, Partition{1}, Partition{2}, f, t, 10,
                                        30, 1e-12);
    EXPECT_LT(rows.back().gap, 1e-6);
    const auto zero = convergence_sweep(Partition{1}, Partition{1}, Partition{}, f, t, 5,
                                        30);
    EXPECT_EQ(zero.back().pi_limit, 0.0);
    for (std::size_t k = 1; k < zero.size(); ++k)
      EXPECT_LT(zero[k].pi_r, zero[k - 1].pi_r);
    EXPECT_LT(zero.back().pi_r, 1e-6);
  }
}

TEST(Sweep, TypeAGapShrinks) {
  const auto rows = convergence_sweep(Partition{1}, Partition{1}, Partition{2}, Family::A,
                                      ThetaSpec::constant(0.5), 2, 20, 1e-13);
  for (std::size_t k = 1; k < rows.size(); ++k)
    EXPECT_LE(rows[k].gap, rows[k - 1].gap);
}

TEST(Sweep, RejectsNonEdges) {
  EXPECT_THROW(convergence_sweep(Partition{1}, Partition{2, 1}, Partition{2, 1}, Family::B,
                                 ThetaSpec::constant(0.5), 3, 5),
               DomainError);
  EXPECT_THROW(convergence_sweep(Partition{1}, Partition{1}, Partition{2}, Family::B,
                                 ThetaSpec::constant(1.5), 3, 5),
               DomainError);
}
