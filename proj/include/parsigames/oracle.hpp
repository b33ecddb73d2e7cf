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
 * \file parsigames/oracle.hpp
 *
 * \brief Brute-force certification of weighted majority games.
 *
 * Every subset of the player set is visited, so the cost is Theta(2^n) per
 * game. Subset weights are assembled from two half-tables (low players and
 * high players), which keeps memory at O(2^{n/2}).
 *
 * When the total weight fits comfortably in 64 bits the scan runs on
 * std::int64_t; otherwise it falls back to BigInt. It never wraps.
 */

#ifndef PARSIGAMES_ORACLE_HPP
#define PARSIGAMES_ORACLE_HPP

#include <parsigames/errors.hpp>
#include <parsigames/representations.hpp>

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace parsigames {

inline constexpr int kDefaultOracleCap = 16;
/// Hard ceiling for any configured cap; 2^40 subsets is already days of work.
inline constexpr int kMaxOracleCap = 40;

struct OracleConfig {
  int max_players = kDefaultOracleCap;
};

/// Reads PARSIGAMES_ORACLE_CAP if set, otherwise the default cap.
inline OracleConfig oracle_config_from_env() {
  OracleConfig config;
  if (const char* raw = std::getenv("PARSIGAMES_ORACLE_CAP"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 1 || value > kMaxOracleCap) {
      throw DomainError("PARSIGAMES_ORACLE_CAP must be an integer in [1, " +
                        std::to_string(kMaxOracleCap) + "], got '" + raw + "'");
    }
    config.max_players = static_cast<int>(value);
  }
  return config;
}

/// A subset of {1..n}; player i (1-based) is bit i-1 of the mask.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}

  static Coalition of(std::initializer_list<int> players) {
    std::uint64_t mask = 0;
    for (int p : players) {
      if (p < 1 || p > 64) throw DomainError("player index out of range");
      mask |= std::uint64_t{1} << (p - 1);
    }
    return Coalition(mask);
  }

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr bool contains(int player) const noexcept { return (mask_ >> (player - 1)) & 1u; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  std::uint64_t mask_ = 0;
};

struct CertificationReport {
  int n = 0;
  std::size_t wm_count = 0;
  bool homogeneous = false;
  bool constant_sum = false;
  bool dummy_free = false;
  bool parsimonious = false;
  /// Minimal winning coalitions in ascending mask order.
  std::vector<Coalition> wm_list;
};

/// Square 0/1 matrix stored row-major.
class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Bit at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Bit v) { data_[r * cols_ + c] = v; }

  std::vector<Bit> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  std::size_t row_sum(std::size_t r) const {
    std::size_t s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += at(r, c);
    return s;
  }

  BinaryMatrix transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Bit> data_;
};

namespace detail {

inline void check_cap(int n, const OracleConfig& config) {
  if (n > config.max_players) {
    throw CapacityError("oracle refuses a game with " + std::to_string(n) + " players",
                        config.max_players);
  }
  if (n > 63) throw CapacityError("coalition masks hold at most 63 players", 63);
}

// w(S) = lo[S & low_mask] + hi[S >> half].
template <class Int>
class SubsetWeights {
 public:
  explicit SubsetWeights(const std::vector<Int>& w)
      : half_(static_cast<int>(w.size()) / 2),
        lo_(half_table(w, 0, half_)),
        hi_(half_table(w, half_, static_cast<int>(w.size()))) {}

  Int operator()(std::uint64_t mask) const {
    const std::uint64_t low_mask = (std::uint64_t{1} << half_) - 1;
    return lo_[mask & low_mask] + hi_[mask >> half_];
  }

 private:
  static std::vector<Int> half_table(const std::vector<Int>& w, int from, int to) {
    const int len = to - from;
    std::vector<Int> table(std::size_t{1} << len, Int(0));
    for (std::uint64_t s = 1; s < table.size(); ++s) {
      const int low = std::countr_zero(s);
      table[s] = table[s & (s - 1)] + w[static_cast<std::size_t>(from + low)];
    }
    return table;
  }

  int half_;
  std::vector<Int> lo_;
  std::vector<Int> hi_;
};

// Weights are non-decreasing, so the lightest member of S is its lowest
// set bit; S is minimal winning iff it wins and loses once that member leaves.
template <class Int>
CertificationReport scan(const std::vector<Int>& w, const Int& quota, bool collect_wm) {
  const int n = static_cast<int>(w.size());
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  SubsetWeights<Int> weight(w);

  CertificationReport report;
  report.n = n;
  report.homogeneous = true;
  report.constant_sum = true;
  std::uint64_t covered = 0;
  for (std::uint64_t s = 0;; ++s) {
    const Int ws = weight(s);
    const bool wins = ws >= quota;
    const bool complement_wins = weight(full & ~s) >= quota;
    if (wins == complement_wins) report.constant_sum = false;
    if (wins && s != 0) {
      const Int lightest = w[static_cast<std::size_t>(std::countr_zero(s))];
      if (ws - lightest < quota) {
        ++report.wm_count;
        covered |= s;
        if (ws != quota) report.homogeneous = false;
        if (collect_wm) report.wm_list.emplace_back(s);
      }
    }
    if (s == full) break;
  }
  report.dummy_free = covered == full;
  report.parsimonious = report.wm_count == static_cast<std::size_t>(n) && report.homogeneous &&
                        report.constant_sum && report.dummy_free;
  return report;
}

inline std::optional<std::vector<std::int64_t>> narrow_weights(const MinHomRepr& r) {
  // Headroom so that any subset sum stays below 2^62.
  const BigInt limit = BigInt(1) << 62;
  if (r.total_weight() >= limit) return std::nullopt;
  std::vector<std::int64_t> out;
  out.reserve(r.weights().size());
  for (const BigInt& w : r.weights()) out.push_back(w.convert_to<std::int64_t>());
  return out;
}

inline CertificationReport run_scan(const MinHomRepr& r, bool collect_wm) {
  if (auto narrow = narrow_weights(r)) {
    return scan<std::int64_t>(*narrow, r.quota().convert_to<std::int64_t>(), collect_wm);
  }
  std::vector<BigInt> wide(r.weights().begin(), r.weights().end());
  return scan<BigInt>(wide, r.quota(), collect_wm);
}

}  // namespace detail

inline BigInt coalition_weight(Coalition s, const MinHomRepr& r) {
  BigInt total = 0;
  for (int p : s.members()) total += r.weights()[static_cast<std::size_t>(p - 1)];
  return total;
}

inline bool is_winning(Coalition s, const MinHomRepr& r) {
  if (r.players() < 64 && (s.mask() >> r.players()) != 0) {
    throw DomainError("coalition contains a player outside 1..n");
  }
  return coalition_weight(s, r) >= r.quota();
}

/// All minimal winning coalitions, ascending by mask.
inline std::vector<Coalition> minimal_winning_set(const MinHomRepr& r,
                                                  const OracleConfig& config = {}) {
  detail::check_cap(r.players(), config);
  return detail::run_scan(r, true).wm_list;
}

inline CertificationReport certify(const MinHomRepr& r, const OracleConfig& config = {}) {
  detail::check_cap(r.players(), config);
  return detail::run_scan(r, true);
}

/// Row j, column i is 1 iff player i+1 is in the (j+1)-th minimal winning
/// coalition (ascending mask order). Requires exactly n minimal winning
/// coalitions.
inline BinaryMatrix incidence_matrix(const MinHomRepr& r, const OracleConfig& config = {}) {
  const std::vector<Coalition> wm = minimal_winning_set(r, config);
  const auto n = static_cast<std::size_t>(r.players());
  if (wm.size() != n) {
    throw DomainError("incidence matrix is not square: " + std::to_string(wm.size()) +
                      " minimal winning coalitions for " + std::to_string(n) + " players");
  }
  BinaryMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m.set(j, i, wm[j].contains(static_cast<int>(i) + 1));
  return m;
}

inline BinaryMatrix incidence_matrix(const Game& g, const OracleConfig& config = {}) {
  return incidence_matrix(g.weights(), config);
}

}  // namespace parsigames

#endif  // PARSIGAMES_ORACLE_HPP
