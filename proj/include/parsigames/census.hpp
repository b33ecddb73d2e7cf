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
 * \file parsigames/census.hpp
 *
 * \brief Counting triangles indexed by (m, k) = (n - 4, h - 2).
 *
 *  - C(m, k):     all parsimonious games (binomial coefficients);
 *  - Gamma(m, k): self-twin games;
 *  - Delta(m, k): games that are not self-twin, C - Gamma;
 *  - Theta(m, k): unordered pairs of distinct twins, Delta / 2.
 *
 * Gamma is available in closed form and through its modified Pascal rule
 * (difference instead of sum on cells with m + k odd); Delta likewise by
 * subtraction and by its own recurrence. census_by_enumeration() produces
 * one observed row by walking every game.
 */

#ifndef PARSIGAMES_CENSUS_HPP
#define PARSIGAMES_CENSUS_HPP

#include <parsigames/errors.hpp>
#include <parsigames/representations.hpp>
#include <parsigames/symmetry.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace parsigames {

enum class TriangleKind { C, Gamma, Delta, Theta };

inline std::string_view triangle_name(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::C: return "c";
    case TriangleKind::Gamma: return "gamma";
    case TriangleKind::Delta: return "delta";
    case TriangleKind::Theta: return "theta";
  }
  return "?";
}

/// Dense lower-triangular table; row m has entries k = 0..m.
class Triangle {
 public:
  Triangle(TriangleKind kind, int max_m) : kind_(kind) {
    if (max_m < 0) throw DomainError("triangle needs max_m >= 0");
    rows_.reserve(static_cast<std::size_t>(max_m) + 1);
    for (int m = 0; m <= max_m; ++m) rows_.emplace_back(static_cast<std::size_t>(m) + 1, BigInt(0));
  }

  TriangleKind kind() const noexcept { return kind_; }
  int max_m() const noexcept { return static_cast<int>(rows_.size()) - 1; }

  const BigInt& at(int m, int k) const { return rows_.at(static_cast<std::size_t>(m)).at(static_cast<std::size_t>(k)); }
  BigInt& at(int m, int k) { return rows_.at(static_cast<std::size_t>(m)).at(static_cast<std::size_t>(k)); }
  const std::vector<BigInt>& row(int m) const { return rows_.at(static_cast<std::size_t>(m)); }

  BigInt row_sum(int m) const {
    BigInt s = 0;
    for (const BigInt& v : row(m)) s += v;
    return s;
  }

  /// Same entries, regardless of kind.
  bool same_entries(const Triangle& other) const { return rows_ == other.rows_; }

 private:
  TriangleKind kind_;
  std::vector<std::vector<BigInt>> rows_;
};

inline constexpr int kDefaultTriangleMaxM = 20;
inline constexpr int kDefaultEnumerationMaxM = 12;

namespace detail {

inline void check_mk(int m, int k) {
  if (m < 0 || k < 0 || k > m) {
    throw DomainError("need 0 <= k <= m, got m = " + std::to_string(m) + ", k = " + std::to_string(k));
  }
}

}  // namespace detail

/// Pascal's triangle by additive recurrence only.
inline Triangle c_triangle(int max_m) {
  Triangle c(TriangleKind::C, max_m);
  for (int m = 0; m <= max_m; ++m) {
    c.at(m, 0) = 1;
    c.at(m, m) = 1;
    for (int k = 1; k < m; ++k) c.at(m, k) = c.at(m - 1, k) + c.at(m - 1, k - 1);
  }
  return c;
}

/// Number of parsimonious games with n = m + 4 players and h = k + 2 types.
inline BigInt c_count(int m, int k) {
  detail::check_mk(m, k);
  std::vector<BigInt> row{1};
  for (int r = 1; r <= m; ++r) {
    std::vector<BigInt> next(row.size() + 1, BigInt(1));
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// Number of self-twin games with n = m + 4 players.
inline BigInt gamma_total(int m) {
  if (m < 0) throw DomainError("gamma_total needs m >= 0");
  const int exponent = (m % 2 == 0) ? m / 2 : (m + 1) / 2;
  return BigInt(1) << exponent;
}

/// Closed form of Gamma(m, k) as a binomial of the half-sized problem.
inline BigInt gamma_closed(int m, int k) {
  detail::check_mk(m, k);
  const bool m_even = m % 2 == 0;
  const bool k_even = k % 2 == 0;
  if (m_even && k_even) return c_count(m / 2, k / 2);
  if (m_even) return 0;
  if (k_even) return c_count((m - 1) / 2, k / 2);
  return c_count((m - 1) / 2, (k - 1) / 2);
}

inline Triangle gamma_closed_triangle(int max_m) {
  Triangle g(TriangleKind::Gamma, max_m);
  for (int m = 0; m <= max_m; ++m)
    for (int k = 0; k <= m; ++k) g.at(m, k) = gamma_closed(m, k);
  return g;
}

/// Modified Pascal rule: sum when m + k is even, difference when odd.
inline Triangle gamma_recurrence(int max_m) {
  Triangle g(TriangleKind::Gamma, max_m);
  for (int m = 0; m <= max_m; ++m) {
    g.at(m, 0) = 1;
    g.at(m, m) = 1;
    for (int k = 1; k < m; ++k) {
      if ((m + k) % 2 == 0) {
        g.at(m, k) = g.at(m - 1, k) + g.at(m - 1, k - 1);
      } else {
        g.at(m, k) = g.at(m - 1, k) - g.at(m - 1, k - 1);
      }
    }
  }
  return g;
}

inline Triangle delta_by_subtraction(const Triangle& c, const Triangle& gamma) {
  const int max_m = std::min(c.max_m(), gamma.max_m());
  Triangle d(TriangleKind::Delta, max_m);
  for (int m = 0; m <= max_m; ++m)
    for (int k = 0; k <= m; ++k) d.at(m, k) = c.at(m, k) - gamma.at(m, k);
  return d;
}

/// Delta from its own rule; gamma supplies the 2 Gamma(m-1, k-1) correction.
inline Triangle delta_recurrence(const Triangle& gamma) {
  const int max_m = gamma.max_m();
  Triangle d(TriangleKind::Delta, max_m);
  for (int m = 0; m <= max_m; ++m) {
    for (int k = 1; k < m; ++k) {
      d.at(m, k) = d.at(m - 1, k) + d.at(m - 1, k - 1);
      if ((m + k) % 2 != 0) d.at(m, k) += 2 * gamma.at(m - 1, k - 1);
    }
  }
  return d;
}

struct DeltaTheta {
  Triangle delta;
  Triangle theta;
};

/**
 * Delta computed twice (C - Gamma, and its recurrence) and Theta = Delta / 2.
 * Throws InvariantViolation if the two Delta routes disagree or an entry is odd.
 */
inline DeltaTheta delta_theta(int max_m) {
  Triangle by_subtraction = delta_by_subtraction(c_triangle(max_m), gamma_closed_triangle(max_m));
  const Triangle by_recurrence = delta_recurrence(gamma_recurrence(max_m));
  if (!by_subtraction.same_entries(by_recurrence)) {
    throw InvariantViolation("Delta by subtraction disagrees with Delta by recurrence");
  }
  Triangle theta(TriangleKind::Theta, max_m);
  for (int m = 0; m <= max_m; ++m) {
    for (int k = 0; k <= m; ++k) {
      const BigInt& d = by_subtraction.at(m, k);
      if ((d & 1) != 0) {
        throw InvariantViolation("odd Delta entry at m = " + std::to_string(m) + ", k = " + std::to_string(k));
      }
      theta.at(m, k) = d / 2;
    }
  }
  return {std::move(by_subtraction), std::move(theta)};
}

inline Triangle make_triangle(TriangleKind kind, int max_m) {
  switch (kind) {
    case TriangleKind::C: return c_triangle(max_m);
    case TriangleKind::Gamma: return gamma_recurrence(max_m);
    case TriangleKind::Delta: return delta_theta(max_m).delta;
    case TriangleKind::Theta: return delta_theta(max_m).theta;
  }
  throw DomainError("unknown triangle");
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct EnumerationConfig {
  int max_m = kDefaultEnumerationMaxM;
  unsigned jobs = 1;
};

/// Observed counts per k for one value of n.
struct CensusRow {
  int n = 0;
  std::vector<std::uint64_t> total;       // C row
  std::vector<std::uint64_t> self_twin;   // Gamma row
  std::vector<std::uint64_t> twin_pairs;  // Theta row

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

namespace detail {

inline CensusRow classify_window(int n, std::uint64_t first, std::uint64_t last) {
  const auto width = static_cast<std::size_t>(n - 3);
  CensusRow row{n, std::vector<std::uint64_t>(width), std::vector<std::uint64_t>(width),
                std::vector<std::uint64_t>(width)};
  for (const FreeBinaryRepr& fb : FreeBinaryRange(n, first, last)) {
    const Game g = Game::from_free_binary(fb);
    const auto k = static_cast<std::size_t>(g.k());
    ++row.total[k];
    if (is_self_twin(g)) {
      ++row.self_twin[k];
    } else if (g.free_type() < twin(g).free_type()) {
      // one representative per unordered pair
      ++row.twin_pairs[k];
    }
  }
  return row;
}

}  // namespace detail

/// Walks all 2^{n-4} games and tallies them by k and by self-twin status.
inline CensusRow census_by_enumeration(int n, const EnumerationConfig& config = {}) {
  if (n < 4) throw DomainError("census needs n >= 4");
  if (n - 4 > config.max_m) {
    throw CapacityError("enumeration refuses n = " + std::to_string(n), config.max_m + 4);
  }
  const std::uint64_t size = FreeBinaryRange(n).size();
  const std::uint64_t jobs = std::clamp<std::uint64_t>(config.jobs, 1, size);
  if (jobs == 1) return detail::classify_window(n, 0, size);

  std::vector<CensusRow> parts(jobs);
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::uint64_t j = 0; j < jobs; ++j) {
      workers.emplace_back([&parts, n, j, jobs, size] {
        parts[j] = detail::classify_window(n, size * j / jobs, size * (j + 1) / jobs);
      });
    }
  }
  CensusRow merged = parts.front();
  for (std::size_t j = 1; j < parts.size(); ++j) {
    for (std::size_t k = 0; k < merged.total.size(); ++k) {
      merged.total[k] += parts[j].total[k];
      merged.self_twin[k] += parts[j].self_twin[k];
      merged.twin_pairs[k] += parts[j].twin_pairs[k];
    }
  }
  return merged;
}

}  // namespace parsigames

#endif  // PARSIGAMES_CENSUS_HPP
