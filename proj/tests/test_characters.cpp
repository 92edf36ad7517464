#include <random>

#include <gtest/gtest.h>

#include <multgraph/characters.hpp>
#include <multgraph/tableaux.hpp>
#include <multgraph/tensor.hpp>

#include "oracles.hpp"

using namespace multgraph;

TEST(Characters, VectorRepresentationOfC2) {
  const auto &chi = weight_multiplicities(Partition{1}, FamilyRank(Family::C, 2));
  const WeightTable expected{{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
  EXPECT_EQ(chi.expanded(), expected);
  EXPECT_EQ(chi.dimension(), 4u);
}

TEST(Characters, Examples) {
  EXPECT_EQ(weight_multiplicities(Partition{2, 1}, FamilyRank(Family::A, 3))
                .multiplicity(IntWeight{1, 1, 1}),
            2u);
  EXPECT_EQ(dimension(Partition{1}, FamilyRank(Family::B, 3)), 7u);
  EXPECT_EQ(dimension(Partition{2}, FamilyRank(Family::C, 2)), 10u);
  EXPECT_EQ(dimension(Partition{}, FamilyRank(Family::D, 4)), 1u);
  EXPECT_THROW(weight_multiplicities(Partition{1, 1, 1}, FamilyRank(Family::B, 2)),
               DomainError);
}

TEST(Characters, MatchesWeylDimensionFormula) {
  for (Family f : all_families)
    for (int r = f == Family::D ? 2 : 1; r <= 4; ++r)
      for (int k = 0; k <= 4; ++k)
        for (const auto &lambda : partitions_of(k, r)) {
          const FamilyRank fr(f, r);
          const auto d = oracle::weyl_dimension(lambda.padded(r), fr);
          ASSERT_EQ(d.denominator(), 1);
          EXPECT_EQ(dimension(lambda, fr), static_cast<std::uint64_t>(d.numerator()))
              << lambda.to_string() << " " << fr.to_string();
        }
}

TEST(Characters, StructuralInvariants) {
  std::mt19937 gen(5);
  for (Family f : all_families)
    for (int r = f == Family::D ? 2 : 1; r <= 4; ++r)
      for (int k = 0; k <= 4; ++k)
        for (const auto &lambda : partitions_of(k, r)) {
          const FamilyRank fr(f, r);
          const auto &chi = weight_multiplicities(lambda, fr);
          const IntWeight top = lambda.padded(r);
          EXPECT_EQ(chi.multiplicity(top), 1u);
          // dim V(lambda) <= (dim V(box))^{|lambda|}
          long double cap = 1;
          for (int i = 0; i < k; ++i)
            cap *= fr.defining_dimension();
          EXPECT_LE(static_cast<long double>(chi.dimension()), cap);

          const auto group = oracle::weyl_group(f, r);
          std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
          const auto table = chi.expanded();
          for (const auto &[w, m] : table) {
            IntWeight diff(r);
            for (int i = 0; i < r; ++i)
              diff[i] = top[i] - w[i];
            for (const auto &c : simple_root_coordinates(WeightVec(diff), fr)) {
              EXPECT_EQ(c.denominator(), 1);
              EXPECT_GE(c, Rational(0));
            }
          }
          for (int trial = 0; trial < 50; ++trial) {
            const auto &g = group[pick(gen)];
            for (const auto &[w, m] : table)
              EXPECT_EQ(chi.multiplicity(g.apply(w)), m);
          }
        }
}

TEST(Tableaux, Examples) {
  EXPECT_EQ(ssyt_character(Partition{1}, 2),
            (WeightTable{{{1, 0}, 1}, {{0, 1}, 1}}));
  std::uint64_t mass = 0;
  for (const auto &[w, m] : ssyt_character(Partition{2, 1}, 3))
    mass += m;
  EXPECT_EQ(mass, 8u);
  EXPECT_EQ(ssyt_character(Partition{2}, 2),
            (WeightTable{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
}

TEST(Tableaux, FreudenthalAgreesWithTableaux) {
  for (int r = 1; r <= 4; ++r)
    for (int k = 0; k <= 6; ++k)
      for (const auto &lambda : partitions_of(k, r))
        EXPECT_EQ(weight_multiplicities(lambda, FamilyRank(Family::A, r)).expanded(),
                  ssyt_character(lambda, r))
            << lambda.to_string() << " r=" << r;
}

TEST(Tableaux, LittlewoodRichardsonExamples) {
  EXPECT_EQ(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}), 2u);
  EXPECT_EQ(lr_coefficient(Partition{1}, Partition{1}, Partition{2}), 1u);
  EXPECT_EQ(lr_coefficient(Partition{1}, Partition{1}, Partition{}), 0u);
  EXPECT_EQ(lr_coefficient(Partition{}, Partition{2, 1}, Partition{2, 1}), 1u);
}

TEST(Tensor, Examples) {
  for (int r = 2; r <= 4; ++r) {
    const auto dec = tensor_decompose(Partition{1}, Partition{1}, FamilyRank(Family::A, r));
    EXPECT_EQ(dec.entries, (PartitionCounts{{Partition{2}, 1}, {Partition{1, 1}, 1}}));
  }
  EXPECT_EQ(tensor_decompose(Partition{3, 1}, Partition{2}, FamilyRank(Family::B, 3))
                .multiplicity(Partition{3, 1}),
            2u);
  EXPECT_EQ(tensor_decompose(Partition{1}, Partition{1}, FamilyRank(Family::C, 2)).entries,
            (PartitionCounts{{Partition{2}, 1}, {Partition{1, 1}, 1}, {Partition{}, 1}}));
}

TEST(Tensor, SoFourKeepsNonPartitionMassAside) {
  const auto dec = tensor_decompose(Partition{1}, Partition{1}, FamilyRank(Family::D, 2));
  EXPECT_EQ(dec.discarded, (std::map<IntWeight, std::uint64_t>{{{1, -1}, 1}}));
  EXPECT_EQ(dec.discarded_nonpartition_mass, 3u);
  EXPECT_EQ(dec.entries,
            (PartitionCounts{{Partition{2}, 1}, {Partition{1, 1}, 1}, {Partition{}, 1}}));
}

TEST(Tensor, TypeAMatchesLittlewoodRichardson) {
  for (int a = 0; a <= 4; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto &lambda : partitions_of(a))
        for (const auto &delta : partitions_of(b)) {
          const FamilyRank fr(Family::A, lambda.length() + delta.length());
          const auto dec = tensor_decompose(lambda, delta, fr);
          for (const auto &mu : partitions_of(a + b, fr.rank()))
            EXPECT_EQ(dec.multiplicity(mu), lr_coefficient(lambda, delta, mu))
                << lambda.to_string() << " x " << delta.to_string() << " -> "
                << mu.to_string();
        }
}

TEST(Tensor, DimensionsAndDegreesAddUp) {
  for (Family f : all_families)
    for (int r = f == Family::D ? 2 : 1; r <= 4; ++r)
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
          for (const auto &lambda : partitions_of(a, r))
            for (const auto &delta : partitions_of(b, r)) {
              if (a + b > 6)
                continue;
              const FamilyRank fr(f, r);
              const auto dec = tensor_decompose(lambda, delta, fr);
              std::uint64_t total = dec.discarded_nonpartition_mass;
              for (const auto &[mu, m] : dec.entries) {
                total += m * dimension(mu, fr);
                EXPECT_LE(mu.size(), a + b);
                if (f == Family::A)
                  EXPECT_EQ(mu.size(), a + b);
              }
              EXPECT_EQ(total, dimension(lambda, fr) * dimension(delta, fr))
                  << lambda.to_string() << " x " << delta.to_string() << " at "
                  << fr.to_string();
              if (f != Family::D)
                EXPECT_FALSE(dec.has_discards());
            }
}

TEST(Tensor, PowerMultiplicities) {
  const auto a2 = iterated_power_multiplicities(Partition{1}, 2, FamilyRank(Family::A, 2));
  EXPECT_EQ(a2[1].entries, (PartitionCounts{{Partition{2}, 1}, {Partition{1, 1}, 1}}));
  const auto b3 = iterated_power_multiplicities(Partition{2}, 2, FamilyRank(Family::B, 3));
  EXPECT_EQ(b3[1].multiplicity(Partition{2, 1, 1}), 0u);
  for (Family f : all_families) {
    const auto one = iterated_power_multiplicities(Partition{1}, 1, FamilyRank(f, 3));
    EXPECT_EQ(one[0].entries, (PartitionCounts{{Partition{1}, 1}}));
  }
  EXPECT_THROW(iterated_power_multiplicities(Partition{}, 2, FamilyRank(Family::A, 2)),
               DomainError);
}

TEST(Tensor, PowerMultiplicitiesStabilize) {
  for (Family f : all_families)
    for (const auto &delta : {Partition{1}, Partition{2}, Partition{1, 1}})
      for (int n = 1; n <= 3; ++n) {
        const int r = std::max(n * delta.length(), f == Family::D ? 2 : 1);
        EXPECT_EQ(iterated_power_multiplicities(delta, n, FamilyRank(f, r)).back().entries,
                  iterated_power_multiplicities(delta, n, FamilyRank(f, r + 1)).back().entries);
      }
}

TEST(Tensor, StableMultiplicities) {
  for (Family f : all_families)
    EXPECT_EQ(stable_tensor_multiplicity(Partition{1}, Partition{1}, Partition{2}, f), 1u);
  EXPECT_EQ(stable_tensor_multiplicity(Partition{1}, Partition{1}, Partition{}, Family::C), 1u);
  EXPECT_EQ(tensor_decompose(Partition{1}, Partition{1}, FamilyRank(Family::C, 3))
                .multiplicity(Partition{}),
            1u);
  EXPECT_EQ(stable_tensor_multiplicity(Partition{1}, Partition{1}, Partition{}, Family::A), 0u);
}

TEST(Tensor, TopDegreeAgreesAcrossFamilies) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto &lambda : partitions_of(a))
        for (const auto &delta : partitions_of(b))
          for (const auto &mu : partitions_of(a + b)) {
            const auto lr = lr_coefficient(lambda, delta, mu);
            for (Family f : all_families)
              EXPECT_EQ(stable_tensor_multiplicity(lambda, delta, mu, f), lr);
          }
}
