// Copyright 2026 The dimerlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/oracle.hpp"
#include "support.hpp"

namespace dimerlab {
namespace {

TEST(Enumeration, MatchingCounts) {
  EXPECT_EQ(count_matchings(TorusLattice(4, 3)), 344);
  EXPECT_EQ(count_matchings(TorusLattice(4, 4)), 1920);
}

TEST(Enumeration, SizeCap) {
  EXPECT_THROW(count_matchings(TorusLattice(6, 7)), SizeLimit);
  EXPECT_THROW(decompose_partition(TorusLattice(8, 6)), SizeLimit);
}

TEST(Enumeration, EveryConfigurationIsDistinctAndValid) {
  const TorusLattice lat(4, 4);
  std::set<std::vector<std::pair<int, int>>> seen;
  enumerate(lat, [&](const SignedConfiguration& sc) {
    EXPECT_TRUE(seen.insert(sc.config.pairs()).second);
    EXPECT_EQ(sc.monomial, sc.config.monomial());
    EXPECT_EQ(sc.monomial[0] + sc.monomial[1] + sc.monomial[2], 8);
  });
  EXPECT_EQ(seen.size(), 1920u);
}

// The incremental sign kept by the enumerator equals the from-scratch
// permutation sign, and both equal the contour product against sigma_st.
TEST(Signs, PermutationAndContourRoutesAgree) {
  for (auto [m, n] : {std::pair{4, 3}, {4, 4}, {6, 3}}) {
    const TorusLattice lat(m, n);
    const DimerConfiguration st = standard_configuration(lat);
    long checked = 0;
    enumerate(lat, [&](const SignedConfiguration& sc) {
      const ContourDecomposition dec = superpose(lat, sc.config, st);
      for (int i = 1; i <= 4; ++i) {
        ASSERT_EQ(config_sign(lat, sc.config, i), sc.sign[i - 1]);
        ASSERT_EQ(sc.sign[i - 1], contour_sign_product(lat, dec, i));
      }
      ++checked;
    });
    EXPECT_GT(checked, 0);
  }
}

// Signs of arbitrary pairs, not only pairs against sigma_st.
TEST(Signs, ContourProductForArbitraryPairs) {
  const TorusLattice lat(4, 3);
  std::vector<SignedConfiguration> all;
  enumerate(lat, [&](const SignedConfiguration& sc) { all.push_back(sc); });
  for (std::size_t a = 0; a < all.size(); a += 7)
    for (std::size_t b = 0; b < all.size(); b += 5) {
      const ContourDecomposition dec = superpose(lat, all[a].config, all[b].config);
      for (int i = 1; i <= 4; ++i)
        ASSERT_EQ(all[a].sign[i - 1] * all[b].sign[i - 1], contour_sign_product(lat, dec, i));
    }
}

TEST(Contours, TraversalDirectionDoesNotChangeParity) {
  const TorusLattice lat(4, 4);
  const DimerConfiguration st = standard_configuration(lat);
  enumerate(lat, [&](const SignedConfiguration& sc) {
    for (const Contour& c : superpose(lat, sc.config, st).contours) {
      if (c.trivial) continue;
      Contour reversed = c;
      std::reverse(reversed.vertices.begin() + 1, reversed.vertices.end());
      reversed.winding_dx = -c.winding_dx;
      reversed.winding_dy = -c.winding_dy;
      for (int i = 1; i <= 4; ++i) {
        ASSERT_EQ(clockwise_count(lat, c, i) % 2, clockwise_count(lat, reversed, i) % 2);
        if (!c.winds()) {
          ASSERT_EQ(clockwise_count(lat, c, i), clockwise_count(lat, reversed, i));
        }
      }
    }
  });
}

TEST(Contours, StructureOfSuperposition) {
  const TorusLattice lat(4, 3);
  const DimerConfiguration st = standard_configuration(lat);
  const auto self = superpose(lat, st, st);
  EXPECT_EQ(self.contours.size(), 6u);
  for (const auto& c : self.contours) EXPECT_TRUE(c.trivial);
  // Shifting every row by one column gives one winding contour per row.
  const auto shifted = superpose(lat, shift(lat, st, 1, 0), st);
  EXPECT_EQ(shifted.contours.size(), 3u);
  for (const auto& c : shifted.contours) {
    EXPECT_EQ(c.length(), 4u);
    EXPECT_TRUE(c.winds());
    EXPECT_EQ(c.vertices.front(), *std::min_element(c.vertices.begin(), c.vertices.end()));
  }
}

TEST(Partition, FourByFourClasses) {
  const auto dec = decompose_partition(TorusLattice(4, 4));
  const WeightPoint one{1, 1, 1};
  EXPECT_EQ(dec.z.eval(one), 1920);
  EXPECT_EQ(dec.z00().eval(one), 576);
  EXPECT_EQ(dec.z10().eval(one), 448);
  EXPECT_EQ(dec.z01().eval(one), 448);
  EXPECT_EQ(dec.z11().eval(one), 448);
}

TEST(Partition, OddRowShiftBijection) {
  const auto dec = decompose_partition(TorusLattice(4, 3));
  EXPECT_EQ(dec.z00(), dec.z10());
  EXPECT_EQ(dec.z01(), dec.z11());
}

TEST(Partition, SignedSumsEqualPfaffiansAndReconstructZ) {
  for (auto [m, n] : {std::pair{4, 3}, {4, 4}, {6, 3}}) {
    const TorusLattice lat(m, n);
    const auto dec = decompose_partition(lat);
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(dec.pf[i - 1], pfaffian_symbolic(lat, i, PfaffianMethod::expansion));
    EXPECT_EQ(halve_exact(partition_from_pfaffians(dec.pf)), dec.z);
    EXPECT_EQ(classes_from_pfaffians(dec.pf), dec.z_class);
  }
}

TEST(Partition, NumericLinearSolve) {
  const std::array<BigRational, 4> pf{-768, 1024, 1024, 1024};
  const auto z = classes_from_pfaffians(pf);
  EXPECT_EQ(z[0], 576);
  EXPECT_EQ(z[1], 448);
  EXPECT_EQ(z[2], 448);
  EXPECT_EQ(z[3], 448);
  EXPECT_EQ(partition_from_pfaffians(pf) / 2, 1920);
}

TEST(Partition, SixBySixGoldenReconstruction) {
  const auto pf = testing::golden_pfaffians(6, 6);
  std::array<BigRational, 4> at_one;
  for (int i = 0; i < 4; ++i) at_one[i] = pf[i].eval({1, 1, 1});
  EXPECT_EQ(partition_from_pfaffians(at_one) / 2, 10045824);
}

TEST(ExcitationClasses, FourByThreeAndFourByFive) {
  for (auto [m, n] : {std::pair{4, 3}, {4, 5}}) {
    const auto rep = count_excitation_classes(TorusLattice(m, n));
    long expected = m;
    for (int k = 0; k < n - 1; ++k) expected *= m / 2;
    EXPECT_EQ(rep.sigma0.count, expected);
    EXPECT_EQ(rep.sigma0.negative[1], 0);
  }
}

TEST(ExcitationClasses, FourByFour) {
  const auto rep = count_excitation_classes(TorusLattice(4, 4));
  EXPECT_EQ(rep.sigma0_1.count, 32);
  EXPECT_EQ(rep.sigma0_1.negative[0], 32);
  EXPECT_EQ(rep.sigma0_2.count, 32);
  EXPECT_EQ(rep.sigma0_2.positive[0], 32);
  EXPECT_EQ(rep.sigma0.count, rep.sigma0_1.count + rep.sigma0_2.count);
  EXPECT_EQ(rep.sigma1.count, 0);
  EXPECT_EQ(rep.sigma2_1.count, 192);
  EXPECT_EQ(rep.sigma2_2.count, 64);
  EXPECT_EQ(rep.sigma2.count, rep.sigma2_1.count + rep.sigma2_2.count);
  EXPECT_EQ(rep.sigma2.negative[0], 256);
}

TEST(ExcitationClasses, ClassCountsGeneralizeToFourBySix) {
  // |Sigma_2^1| = n(n-1)(m/2)^n and |Sigma_2^2| = n(m/2)^n at m = 4, n = 6.
  const auto rep = count_excitation_classes(TorusLattice(4, 6));
  EXPECT_EQ(rep.sigma0_1.count, 128);
  EXPECT_EQ(rep.sigma0_2.count, 128);
  EXPECT_EQ(rep.sigma1.count, 0);
  EXPECT_EQ(rep.sigma2_1.count, 6 * 5 * 64);
  EXPECT_EQ(rep.sigma2_2.count, 6 * 64);
}

}  // namespace
}  // namespace dimerlab
