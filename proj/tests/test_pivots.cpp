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
#include <parsigames/pivots.hpp>

#include <gtest/gtest.h>

#include <map>

#include "golden/reference_tables.hpp"

namespace parsigames {
namespace {

PivotRow to_row(int m, const std::vector<golden::PivotCell>& cells) {
  PivotRow row{m, {}};
  for (const auto& cell : cells) row.entries.push_back({cell.value, BigInt(cell.reps)});
  return row;
}

TEST(EvenPivotValue, Examples) {
  EXPECT_EQ(even_pivot_value(4, 3), 7u);
  EXPECT_EQ(even_pivot_value(0, 1), 3u);
  EXPECT_EQ(even_pivot_value(8, 4), 7u);
  EXPECT_EQ(even_pivot_value(8, 5), 11u);
  EXPECT_THROW(even_pivot_value(4, 4), DomainError);
  EXPECT_THROW(even_pivot_value(4, 0), DomainError);
  EXPECT_THROW(even_pivot_value(3, 1), DomainError);
}

TEST(EvenPivotReps, Examples) {
  EXPECT_EQ(even_pivot_reps(10, 1), 16);
  EXPECT_EQ(even_pivot_reps(12, 3), 8);
  for (int m = 0; m <= 12; m += 2) EXPECT_EQ(even_pivot_reps(m, m / 2 + 1), 1);
  EXPECT_THROW(even_pivot_reps(2, 3), DomainError);
}

TEST(EvenPivotRow, ReferenceRows) {
  for (const auto& [m, cells] : golden::kEvenPivots) EXPECT_EQ(even_pivot_row(m), to_row(m, cells)) << "m=" << m;
  for (const auto& [m, reps] : golden::kPivotReps) {
    const PivotRow row = even_pivot_row(m);
    ASSERT_EQ(row.entries.size(), reps.size());
    ASSERT_EQ(row.entries.size(), static_cast<std::size_t>(m / 2 + 1));
    for (std::size_t c = 0; c < reps.size(); ++c) EXPECT_EQ(row.entries[c].repetitions, reps[c]);
  }
}

TEST(PivotSums, Examples) {
  const PivotSums s6 = pivot_sums(6);
  EXPECT_EQ(s6.z, 18);
  EXPECT_EQ(s6.y, 16);
  EXPECT_EQ(s6.phi, 24);
  const PivotSums s0 = pivot_sums(0);
  EXPECT_EQ(s0.z, 3);
  EXPECT_EQ(s0.y, 1);
  EXPECT_EQ(s0.phi, 3);
  EXPECT_EQ(pivot_sums(12).y, 49);
  for (const auto& [m, y] : golden::kSquaredRowSums) EXPECT_EQ(pivot_sums(m).y, y);
  for (int m = 0; m + 2 <= 40; m += 2) EXPECT_EQ(pivot_sums(m + 2).z, pivot_sums(m).z + (m + 3));
}

TEST(OddPivotEntry, Examples) {
  EXPECT_EQ(odd_pivot_entry(5, 1), (PivotEntry{2, 2}));
  EXPECT_EQ(odd_pivot_entry(9, 5), (PivotEntry{12, 1}));
  EXPECT_EQ(odd_pivot_entry(1, 1), (PivotEntry{4, 1}));
  EXPECT_THROW(odd_pivot_entry(4, 1), DomainError);
  EXPECT_THROW(odd_pivot_entry(5, 4), DomainError);
  for (const auto& [m, cells] : golden::kOddPivots) EXPECT_EQ(odd_pivot_row(m), to_row(m, cells)) << "m=" << m;
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi(5), 16);
  EXPECT_EQ(psi(1), 4);
  EXPECT_EQ(psi(9), 64);
  EXPECT_THROW(psi(2), DomainError);
}

TEST(SumLaws, HoldForManyGenerations) {
  for (int m = 0; m <= 60; m += 2) EXPECT_EQ(pivot_sums(m).phi, BigInt(3) << (m / 2));
  for (int m = 1; m <= 61; m += 2) EXPECT_EQ(psi(m), BigInt(4) << ((m - 1) / 2));
}

TEST(HarvestPivots, SmallTrees) {
  const HarvestedPivots h4 = harvest_pivots(build_tree(4));
  EXPECT_EQ(h4.even.rows, (std::vector<PivotRow>{to_row(0, {{3, 1}}), to_row(2, {{1, 1}, {5, 1}}),
                                                 to_row(4, {{1, 2}, {3, 1}, {7, 1}})}));
  const HarvestedPivots h5 = harvest_pivots(build_tree(5));
  EXPECT_EQ(h5.odd.rows, (std::vector<PivotRow>{to_row(1, {{4, 1}}), to_row(3, {{2, 1}, {6, 1}}),
                                                to_row(5, {{2, 2}, {4, 1}, {8, 1}})}));
}

// Harvested pivots agree with the closed forms, repetitions account for all
// odd-length nodes, and the grandchild and diagonal laws hold.
TEST(PivotProperties, HarvestMatchesClosedFormUpTo12) {
  const auto layers = build_tree(12);
  const HarvestedPivots harvested = harvest_pivots(layers);
  EXPECT_EQ(harvested.even, closed_form_pivots(12, PivotParity::Even));
  EXPECT_EQ(harvested.odd, closed_form_pivots(12, PivotParity::Odd));

  for (const PivotRow& row : harvested.even.rows) {
    BigInt reps = 0;
    for (std::size_t c = 0; c < row.entries.size(); ++c) {
      reps += row.entries[c].repetitions;
      if (c > 0) {
        EXPECT_LT(row.entries[c - 1].value, row.entries[c].value);
      }
    }
    EXPECT_EQ(reps, gamma_total(row.m));
  }
  for (const PivotRow& row : harvested.odd.rows) {
    BigInt reps = 0;
    for (const PivotEntry& e : row.entries) reps += e.repetitions;
    EXPECT_EQ(2 * reps, gamma_total(row.m));
  }

  for (int m = 0; m <= 10; m += 2) {
    std::map<std::uint64_t, BigInt> predicted;
    for (const PivotEntry& e : even_pivot_row(m).entries) predicted[e.value + 2] += e.repetitions;
    predicted[1] += BigInt(1) << (m / 2);
    std::map<std::uint64_t, BigInt> actual;
    for (const PivotEntry& e : harvested.even.row_for(m + 2).entries) actual[e.value] += e.repetitions;
    EXPECT_EQ(actual, predicted) << "m=" << m;
  }

  for (int m = 0; m + 2 <= 12; m += 2) {
    for (int c = 1; c <= m / 2 + 1; ++c) EXPECT_EQ(even_pivot_reps(m + 2, c + 1), even_pivot_reps(m, c));
  }

  EXPECT_THROW(harvested.even.row_for(3), DomainError);
}

}  // namespace
}  // namespace parsigames
