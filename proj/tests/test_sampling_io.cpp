#include <sstream>

#include <gtest/gtest.h>

#include <multgraph/format.hpp>
#include <multgraph/graph_io.hpp>
#include <multgraph/sampling.hpp>

using namespace multgraph;

TEST(SplitMix64, ReferenceOutputs) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
  SplitMix64 u(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
}

TEST(Sampling, SameSeedSameTrajectory) {
  const auto t = ThetaSpec::constant(0.5);
  const auto a = sample_trajectory(Partition{1}, Family::A, t, 12, 9);
  EXPECT_EQ(a, sample_trajectory(Partition{1}, Family::A, t, 12, 9));
  EXPECT_EQ(a.size(), 12u);
  EXPECT_EQ(a.front(), Partition{1});
}

TEST(Sampling, TypeALimitAddsOneBoxPerStep) {
  const auto t = ThetaSpec::constant(0.5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto path = sample_trajectory(Partition{1}, Family::C, t, 8, seed);
    for (std::size_t n = 0; n < path.size(); ++n)
      EXPECT_EQ(path[n].size(), static_cast<int>(n + 1));
  }
}

TEST(Sampling, Sp4StaysInsideThePascalizedLattice) {
  const auto t = ThetaSpec::constant(0.7);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto path = sample_trajectory(Partition{1}, FamilyRank(Family::C, 2), t, 10, seed);
    for (std::size_t k = 0; k < path.size(); ++k) {
      const int n = static_cast<int>(k + 1);
      EXPECT_LE(path[k].size(), n);
      EXPECT_EQ((n - path[k].size()) % 2, 0);
      EXPECT_LE(path[k].length(), 2);
    }
  }
}

TEST(Sampling, RowMatchesLimitKernel) {
  const auto t = ThetaSpec::constant(0.5);
  TrajectorySampler s(Partition{1}, Family::A, t);
  const auto row = s.row(Partition{1});
  ASSERT_EQ(row.targets, (std::vector<Partition>{{2}, {1, 1}}));
  EXPECT_NEAR(row.probabilities[0], 2.0 / 3, 1e-9);
  EXPECT_NEAR(row.probabilities[1], 1.0 / 3, 1e-9);
}

TEST(Format, Numbers) {
  EXPECT_EQ(format_number(2.0 / 3), "0.666666666667");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(0), "0");
  EXPECT_EQ(format_number(1.5e-13), "1.5e-13");
}

TEST(Format, Partitions) {
  EXPECT_EQ(parse_partition("3,1"), (Partition{3, 1}));
  EXPECT_EQ(parse_partition("0"), Partition{});
  for (const char *bad : {"", "1,2", "3,,1", "3,1,", "a", "-1", "2,0"})
    EXPECT_THROW(parse_partition(bad), DomainError) << bad;
  EXPECT_EQ(partition_label(Partition{}), "()");
}

TEST(Output, SweepCsv) {
  std::ostringstream os;
  write_sweep_csv(os, {{3, 0.25, 0.5, 0.25}});
  EXPECT_EQ(os.str(), "r,pi_r,pi_limit,gap\n3,0.25,0.5,0.25\n");
}

TEST(Output, KernelJsonCarriesProbabilities) {
  const auto k = limit_kernel(build_limit_graph(Partition{1}, Family::C, 2),
                              ThetaSpec::constant(0.5));
  const auto j = kernel_to_json(k);
  EXPECT_EQ(j.at("edges").size(), 3u);
  EXPECT_NEAR(j.at("edges").at(0).at("p").get<double>(), 2.0 / 3, 1e-9);
  EXPECT_EQ(j.at("edges").at(2).at("p").get<double>(), 0.0);
  EXPECT_EQ(j.at("theta"), "const:0.5");
}
