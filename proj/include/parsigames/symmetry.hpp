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

#ifndef PARSIGAMES_SYMMETRY_HPP
#define PARSIGAMES_SYMMETRY_HPP

#include <parsigames/oracle.hpp>
#include <parsigames/representations.hpp>

#include <algorithm>
#include <span>
#include <vector>

namespace parsigames {

/// The twin game: free type vector reversed. An involution preserving n and h.
inline Game twin(const Game& g) {
  std::vector<unsigned> x(g.free_type().components().begin(), g.free_type().components().end());
  std::reverse(x.begin(), x.end());
  return Game(FreeTypeRepr(std::move(x)));
}

template <class T>
bool is_palindrome(std::span<const T> v) {
  return std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.rbegin());
}

/// Self-twin iff the free type vector reads the same both ways.
inline bool is_self_twin(const Game& g) { return is_palindrome(g.free_type().components()); }

inline bool is_free_binary_palindrome(const FreeBinaryRepr& fb) { return is_palindrome(fb.bits()); }

/// 1-based positions I_1 < ... < I_h of the 1-bits of a full binary vector.
class OnesPositions {
 public:
  explicit OnesPositions(std::vector<int> positions) : positions_(std::move(positions)) {
    if (positions_.size() < 2 || positions_.front() != 1 ||
        !std::is_sorted(positions_.begin(), positions_.end(), std::less_equal<>{})) {
      throw MalformedRepresentation("ones positions must start at 1 and strictly increase");
    }
  }

  std::span<const int> positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  int operator[](std::size_t t) const { return positions_[t]; }

  friend bool operator==(const OnesPositions&, const OnesPositions&) = default;

 private:
  std::vector<int> positions_;
};

inline OnesPositions ones_positions(const FullBinaryRepr& b) {
  std::vector<int> positions;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 1) positions.push_back(static_cast<int>(i) + 1);
  }
  return OnesPositions(std::move(positions));
}

/// I_t + I_{h+1-t} = n + 1 for every t.
inline bool symmetry_positions_check(const OnesPositions& ones, int n) {
  if (ones.positions().back() != n) {
    throw DomainError("ones positions do not belong to an n = " + std::to_string(n) + " game");
  }
  const std::size_t h = ones.size();
  for (std::size_t t = 0; t < h; ++t) {
    if (ones[t] + ones[h - 1 - t] != n + 1) return false;
  }
  return true;
}

namespace detail {

inline BinaryMatrix with_sorted_rows(const BinaryMatrix& m) {
  std::vector<std::vector<Bit>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::sort(rows.begin(), rows.end());
  BinaryMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, rows[r][c]);
  return out;
}

}  // namespace detail

/**
 * Checks that the incidence matrix of twin(g) is the transpose of the
 * incidence matrix of g, up to the order of rows.
 *
 * Columns of the transpose are the minimal winning coalitions of g; they are
 * put in canonical order first by sorting the rows of M(g) lexicographically
 * (membership of player 1 most significant). With that column order no
 * relabeling of equal-weight players is needed.
 */
inline bool twin_transpose_check(const Game& g, const OracleConfig& config = {}) {
  const BinaryMatrix m = incidence_matrix(g, config);
  const BinaryMatrix twin_m = incidence_matrix(twin(g), config);
  const BinaryMatrix lhs = detail::with_sorted_rows(detail::with_sorted_rows(m).transposed());
  return lhs == detail::with_sorted_rows(twin_m);
}

inline bool twin_quota_check(const Game& g) { return g.weights().quota() == twin(g).weights().quota(); }

}  // namespace parsigames

#endif  // PARSIGAMES_SYMMETRY_HPP
