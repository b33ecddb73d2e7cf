// Copyright 2026 The parsigames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <parsigames/census.hpp>

#include <gtest/gtest.h>

#include "golden/reference_tables.hpp"
#include "oracles.hpp"

namespace parsigames {
namespace {

std::vector<BigInt> row_of(const golden::Rows& rows, int m) {
  const auto& r = rows[static_cast<std::size_t>(m)];
  return {r.begin(), r.end()};
}

std::vector<BigInt> big_row(const std::vector<std::uint64_t>& r) { return {r.begin(), r.end()}; }

TEST(CCount, MatchesFactorialBinomials) {
  EXPECT_EQ(c_count(4, 2), 6);
  EXPECT_EQ(c_count(5, 3), 10);
  EXPECT_EQ(c_count(9, 0), 1);
  for (int m = 0; m <= 40; ++m)
    for (int k = 0; k <= m; ++k) ASSERT_EQ(c_count(m, k), oracles::binomial_by_factorials(m, k));
}

TEST(CCount, RejectsOutOfRange) {
  EXPECT_THROW(c_count(3, 4), DomainError);
  EXPECT_THROW(c_count(3, -1), DomainError);
  EXPECT_THROW(c_count(-1, 0), DomainError);
}

TEST(CTriangle, RowSumsArePowersOfTwo) {
  const Triangle c = c_triangle(kDefaultTriangleMaxM);
  for (int m = 0; m <= c.max_m(); ++m) EXPECT_EQ(c.row_sum(m), BigInt(1) << m);
}

TEST(GammaTotal, Examples) {
  EXPECT_EQ(gamma_total(0), 1);
  EXPECT_EQ(gamma_total(4), 4);
  EXPECT_EQ(gamma_total(5), 8);
  EXPECT_THROW(gamma_total(-1), DomainError);
}

TEST(GammaClosed, Examples) {
  EXPECT_EQ(gamma_closed(4, 2), 2);
  EXPECT_EQ(gamma_closed(6, 3), 0);
  EXPECT_EQ(gamma_closed(7, 4), 3);
  EXPECT_THROW(gamma_closed(4, 5), DomainError);
}

TEST(GammaRecurrence, ReferenceTable) {
  const Triangle g = gamma_recurrence(8);
  for (int m = 0; m <= 8; ++m) EXPECT_EQ(g.row(m), row_of(golden::kGamma, m)) << "m=" << m;
  EXPECT_EQ(g.at(8, 4), g.at(7, 4) + g.at(7, 3));
  EXPECT_EQ(g.at(8, 4), 6);
  EXPECT_EQ(g.at(8, 3), g.at(7, 3) - g.at(7, 2));
  EXPECT_EQ(g.at(8, 3), 0);
}

TEST(Gamma, ClosedFormRecurrenceAndPalindromeCountAgree) {
  const Triangle closed = gamma_closed_triangle(kDefaultTriangleMaxM);
  const Triangle recurrence = gamma_recurrence(kDefaultTriangleMaxM);
  EXPECT_TRUE(closed.same_entries(recurrence));
  for (int m = 0; m <= kDefaultTriangleMaxM; ++m) {
    EXPECT_EQ(closed.row_sum(m), gamma_total(m));
    EXPECT_EQ(closed.at(m, 0), 1);
    EXPECT_EQ(closed.at(m, m), 1);
  }
  // Self-twin games with n = m + 4 are the m-bit palindromes.
  for (int m = 0; m <= 16; ++m)
    for (int k = 0; k <= m; ++k) ASSERT_EQ(closed.at(m, k), oracles::palindromes_with_ones(m, k));
}

TEST(Gamma, TotalsDoubleThenRepeat) {
  for (int m = 0; m + 2 <= kDefaultTriangleMaxM; m += 2) {
    EXPECT_EQ(gamma_total(m + 1), 2 * gamma_total(m));
    EXPECT_EQ(gamma_total(m + 1), gamma_total(m + 2));
  }
}

TEST(DeltaTheta, ReferenceTables) {
  const DeltaTheta dt = delta_theta(8);
  for (int m = 0; m <= 8; ++m) {
    EXPECT_EQ(dt.delta.row(m), row_of(golden::kDelta, m)) << "m=" << m;
    EXPECT_EQ(dt.theta.row(m), row_of(golden::kTheta, m)) << "m=" << m;
  }
}

TEST(DeltaTheta, BothRoutesAgreeAndEdgesVanish) {
  const Triangle gamma = gamma_recurrence(kDefaultTriangleMaxM);
  const Triangle sub = delta_by_subtraction(c_triangle(kDefaultTriangleMaxM), gamma_closed_triangle(kDefaultTriangleMaxM));
  const Triangle rec = delta_recurrence(gamma);
  EXPECT_TRUE(sub.same_entries(rec));
  const DeltaTheta dt = delta_theta(kDefaultTriangleMaxM);
  for (int m = 0; m <= kDefaultTriangleMaxM; ++m) {
    EXPECT_EQ(dt.delta.at(m, 0), 0);
    EXPECT_EQ(dt.delta.at(m, m), 0);
    for (int k = 0; k <= m; ++k) EXPECT_EQ(2 * dt.theta.at(m, k), dt.delta.at(m, k));
  }
}

TEST(MakeTriangle, NamesAndKinds) {
  EXPECT_EQ(triangle_name(TriangleKind::Gamma), "gamma");
  EXPECT_EQ(make_triangle(TriangleKind::Theta, 8).row(8), row_of(golden::kTheta, 8));
  EXPECT_EQ(make_triangle(TriangleKind::C, 4).row(4), (std::vector<BigInt>{1, 4, 6, 4, 1}));
}

TEST(CensusByEnumeration, Examples) {
  const CensusRow n8 = census_by_enumeration(8);
  EXPECT_EQ(n8.total, (std::vector<std::uint64_t>{1, 4, 6, 4, 1}));
  EXPECT_EQ(n8.self_twin, (std::vector<std::uint64_t>{1, 0, 2, 0, 1}));
  EXPECT_EQ(n8.twin_pairs, (std::vector<std::uint64_t>{0, 2, 2, 2, 0}));
  const CensusRow n9 = census_by_enumeration(9);
  EXPECT_EQ(n9.self_twin, (std::vector<std::uint64_t>{1, 1, 2, 2, 1, 1}));
  EXPECT_EQ(n9.twin_pairs, (std::vector<std::uint64_t>{0, 2, 4, 4, 2, 0}));
  EXPECT_EQ(census_by_enumeration(4).self_twin, (std::vector<std::uint64_t>{1}));
}

TEST(CensusByEnumeration, CapAndDomain) {
  EXPECT_THROW(census_by_enumeration(3), DomainError);
  EXPECT_THROW(census_by_enumeration(17), CapacityError);
  EXPECT_THROW(census_by_enumeration(10, EnumerationConfig{5, 1}), CapacityError);
}

TEST(CensusByEnumeration, ParallelMatchesSerial) {
  for (unsigned jobs : {2u, 3u, 7u, 64u}) {
    EXPECT_EQ(census_by_enumeration(14, EnumerationConfig{12, jobs}), census_by_enumeration(14)) << jobs;
  }
  EXPECT_EQ(census_by_enumeration(5, EnumerationConfig{12, 16}), census_by_enumeration(5));
}

TEST(CensusByEnumeration, MatchesTrianglesUpTo12) {
  const Triangle c = c_triangle(12);
  const Triangle gamma = gamma_closed_triangle(12);
  const Triangle theta = delta_theta(12).theta;
  for (int m = 0; m <= 12; ++m) {
    const CensusRow row = census_by_enumeration(m + 4, EnumerationConfig{12, 2});
    EXPECT_EQ(big_row(row.total), c.row(m)) << "m=" << m;
    EXPECT_EQ(big_row(row.self_twin), gamma.row(m)) << "m=" << m;
    EXPECT_EQ(big_row(row.twin_pairs), theta.row(m)) << "m=" << m;
  }
}

TEST(BoundaryGames, ApexAndFibonacci) {
  for (int n = 6; n <= 14; ++n) {
    const auto m = static_cast<std::size_t>(n - 4);
    const Game apex = Game::from_free_binary(FreeBinaryRepr(std::vector<Bit>(m, 0)));
    const Game fib = Game::from_free_binary(FreeBinaryRepr(std::vector<Bit>(m, 1)));
    EXPECT_EQ(apex.k(), 0);
    EXPECT_EQ(fib.k(), n - 4);

    std::vector<BigInt> apex_w(static_cast<std::size_t>(n) - 1, 1);
    apex_w.push_back(n - 2);
    EXPECT_EQ(apex.weights(), MinHomRepr(n - 1, apex_w));

    std::vector<BigInt> fib_w;
    for (int i = 1; i <= n - 2; ++i) fib_w.push_back(oracles::fibonacci(i));
    fib_w.push_back(oracles::fibonacci(n - 2));
    fib_w.push_back(oracles::fibonacci(n - 1));
    const MinHomRepr r = fib.weights();
    EXPECT_TRUE(std::equal(r.weights().begin(), r.weights().end(), fib_w.begin(), fib_w.end())) << "n=" << n;
  }
}

}  // namespace
}  // namespace parsigames
