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

/**
 * \file parsigames/pivots.hpp
 *
 * \brief Pivot triangles: which pivot values occur among odd-length
 *  self-twin games of each generation, and how often.
 *
 * Row m lists the distinct pivots in increasing order (column c = 1, 2, ...)
 * with their repetition counts. Even rows skip the value m + 1, so rows are
 * stored as (value, repetitions) pairs rather than indexed by value.
 */

#ifndef PARSIGAMES_PIVOTS_HPP
#define PARSIGAMES_PIVOTS_HPP

#include <parsigames/errors.hpp>
#include <parsigames/genealogy.hpp>
#include <parsigames/representations.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace parsigames {

enum class PivotParity { Even, Odd };

struct PivotEntry {
  std::uint64_t value = 0;
  BigInt repetitions;

  friend bool operator==(const PivotEntry&, const PivotEntry&) = default;
};

struct PivotRow {
  int m = 0;
  std::vector<PivotEntry> entries;  // column c is entries[c - 1]

  friend bool operator==(const PivotRow&, const PivotRow&) = default;
};

struct PivotTriangle {
  PivotParity parity = PivotParity::Even;
  std::vector<PivotRow> rows;

  const PivotRow& row_for(int m) const {
    for (const PivotRow& r : rows) {
      if (r.m == m) return r;
    }
    throw DomainError("pivot triangle has no row m = " + std::to_string(m));
  }

  friend bool operator==(const PivotTriangle&, const PivotTriangle&) = default;
};

namespace detail {

inline void check_even_cell(int m, int c) {
  if (m < 0 || m % 2 != 0) throw DomainError("even pivot row needs an even m >= 0");
  if (c < 1 || c > m / 2 + 1) {
    throw DomainError("column c = " + std::to_string(c) + " outside 1.." + std::to_string(m / 2 + 1));
  }
}

inline void check_odd_row(int m_odd) {
  if (m_odd < 1 || m_odd % 2 == 0) throw DomainError("odd pivot row needs an odd m >= 1");
}

}  // namespace detail

/// x_{m,c}: 2c - 1 for c <= m/2, m + 3 in the last column; generation 0 holds only 3.
inline std::uint64_t even_pivot_value(int m, int c) {
  detail::check_even_cell(m, c);
  if (m == 0) return 3;
  if (c <= m / 2) return 2 * static_cast<std::uint64_t>(c) - 1;
  return 2 * static_cast<std::uint64_t>(c) + 1;
}

/// r_{m,c}: 2^{m/2 - c} for c <= m/2, 1 in the last column.
inline BigInt even_pivot_reps(int m, int c) {
  detail::check_even_cell(m, c);
  if (c == m / 2 + 1) return 1;
  return BigInt(1) << (m / 2 - c);
}

inline PivotRow even_pivot_row(int m) {
  detail::check_even_cell(m, 1);
  PivotRow row{m, {}};
  for (int c = 1; c <= m / 2 + 1; ++c) row.entries.push_back({even_pivot_value(m, c), even_pivot_reps(m, c)});
  return row;
}

/// Odd row m' copies even row m' - 1 with every value shifted up by one.
inline PivotEntry odd_pivot_entry(int m_odd, int c) {
  detail::check_odd_row(m_odd);
  return {even_pivot_value(m_odd - 1, c) + 1, even_pivot_reps(m_odd - 1, c)};
}

inline PivotRow odd_pivot_row(int m_odd) {
  detail::check_odd_row(m_odd);
  PivotRow row{m_odd, {}};
  for (int c = 1; c <= (m_odd - 1) / 2 + 1; ++c) row.entries.push_back(odd_pivot_entry(m_odd, c));
  return row;
}

/// Closed-form rows of the given parity for every generation <= max_m.
inline PivotTriangle closed_form_pivots(int max_m, PivotParity parity) {
  PivotTriangle t{parity, {}};
  const int start = parity == PivotParity::Even ? 0 : 1;
  for (int m = start; m <= max_m; m += 2) {
    t.rows.push_back(parity == PivotParity::Even ? even_pivot_row(m) : odd_pivot_row(m));
  }
  return t;
}

struct PivotSums {
  BigInt z;    // sum of distinct values
  BigInt y;    // z - 2, the squared-numbers row sum
  BigInt phi;  // sum of value * repetitions
};

/// Closed forms Z = 2 + (m/2 + 1)^2, Y = Z - 2, Phi = 3 * 2^{m/2}, each
/// checked against direct summation of the row.
inline PivotSums pivot_sums(int m) {
  const PivotRow row = even_pivot_row(m);
  BigInt z_direct = 0;
  BigInt phi_direct = 0;
  for (const PivotEntry& e : row.entries) {
    z_direct += e.value;
    phi_direct += e.value * e.repetitions;
  }
  const BigInt half_plus_one = m / 2 + 1;
  PivotSums sums{2 + half_plus_one * half_plus_one, half_plus_one * half_plus_one,
                 BigInt(3) << (m / 2)};
  if (sums.z != z_direct || sums.phi != phi_direct) {
    throw InvariantViolation("pivot sums disagree with their closed forms at m = " + std::to_string(m));
  }
  return sums;
}

/// Psi(m') = 4 * 2^{(m'-1)/2}, checked against direct summation.
inline BigInt psi(int m_odd) {
  const PivotRow row = odd_pivot_row(m_odd);
  BigInt direct = 0;
  for (const PivotEntry& e : row.entries) direct += e.value * e.repetitions;
  const BigInt closed = BigInt(4) << ((m_odd - 1) / 2);
  if (closed != direct) {
    throw InvariantViolation("Psi disagrees with its closed form at m = " + std::to_string(m_odd));
  }
  return closed;
}

struct HarvestedPivots {
  PivotTriangle even;
  PivotTriangle odd;
};

/// Tallies the pivots of odd-length nodes in each layer, sorted by value.
inline HarvestedPivots harvest_pivots(const std::vector<GenerationLayer>& layers) {
  HarvestedPivots out{{PivotParity::Even, {}}, {PivotParity::Odd, {}}};
  for (const GenerationLayer& layer : layers) {
    std::map<std::uint64_t, BigInt> tally;
    for (const TreeNode& node : layer.nodes) {
      if (node.pivot) tally[*node.pivot] += 1;
    }
    PivotRow row{layer.m, {}};
    for (auto& [value, count] : tally) row.entries.push_back({value, count});
    (layer.m % 2 == 0 ? out.even : out.odd).rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace parsigames

#endif  // PARSIGAMES_PIVOTS_HPP
