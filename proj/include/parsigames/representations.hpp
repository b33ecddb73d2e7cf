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
 * \file parsigames/representations.hpp
 *
 * \brief The three representations of a parsimonious game and the exact
 *  conversions among them.
 *
 * A parsimonious game with n players is identified by any of
 *
 *  - its free binary vector: the n-4 interior bits of the weight-increase
 *    indicator (b_i = 1 iff w_i > w_{i-1}, with w_0 = 0);
 *  - its free type vector (x_1..x_{h-1}): the number of players sharing each
 *    of the h distinct weights, dropping the forced top count x_h = 1;
 *  - its minimal homogeneous representation (q; w_1..w_n).
 *
 * Documentation uses the 1-based positions of the mathematical model.
 * Storage is 0-based; the translation lives entirely in this header.
 */

#ifndef PARSIGAMES_REPRESENTATIONS_HPP
#define PARSIGAMES_REPRESENTATIONS_HPP

#include <parsigames/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace parsigames {

/// Unbounded exact integer used for weights, quotas and counts.
using BigInt = boost::multiprecision::cpp_int;

using Bit = std::uint8_t;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// The n-4 unconstrained interior bits (b_3..b_{n-2}).
class FreeBinaryRepr {
 public:
  FreeBinaryRepr() = default;

  explicit FreeBinaryRepr(std::vector<Bit> bits) : bits_(std::move(bits)) {
    for (Bit b : bits_) {
      if (b > 1) throw MalformedRepresentation("free binary component is not 0 or 1");
    }
  }

  std::span<const Bit> bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }

  /// Number of players of the game this vector describes.
  int players() const noexcept { return static_cast<int>(bits_.size()) + 4; }

  friend auto operator<=>(const FreeBinaryRepr&, const FreeBinaryRepr&) = default;

 private:
  std::vector<Bit> bits_;
};

/// The full weight-increase indicator, b_1..b_n with b_1=1, b_2=0, b_{n-1}=0, b_n=1.
class FullBinaryRepr {
 public:
  explicit FullBinaryRepr(std::vector<Bit> bits) : bits_(std::move(bits)) {
    const std::size_t n = bits_.size();
    if (n < 4) throw MalformedRepresentation("full binary vector needs at least 4 components");
    for (Bit b : bits_) {
      if (b > 1) throw MalformedRepresentation("full binary component is not 0 or 1");
    }
    if (bits_[0] != 1 || bits_[1] != 0 || bits_[n - 2] != 0 || bits_[n - 1] != 1) {
      throw MalformedRepresentation(
          "full binary vector must start with 1,0 and end with 0,1");
    }
  }

  std::span<const Bit> bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }

  friend auto operator<=>(const FullBinaryRepr&, const FullBinaryRepr&) = default;

 private:
  std::vector<Bit> bits_;
};

/// The free type vector (x_1..x_{h-1}); the top type always has x_h = 1.
class FreeTypeRepr {
 public:
  using value_type = unsigned;

  explicit FreeTypeRepr(std::vector<unsigned> components) : components_(std::move(components)) {
    if (components_.empty()) throw MalformedRepresentation("free type vector is empty");
    for (unsigned x : components_) {
      if (x == 0) throw MalformedRepresentation("free type components must be positive");
    }
    if (components_.size() == 1) {
      if (components_.front() < 3) {
        throw MalformedRepresentation("a single free type component must be at least 3");
      }
    } else if (components_.front() < 2 || components_.back() < 2) {
      throw MalformedRepresentation("first and last free type components must be at least 2");
    }
  }

  std::span<const unsigned> components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  unsigned operator[](std::size_t i) const { return components_[i]; }

  /// n = 1 + sum of components.
  int players() const noexcept {
    return 1 + static_cast<int>(std::accumulate(components_.begin(), components_.end(), 0u));
  }
  /// h = number of components + 1.
  int types() const noexcept { return static_cast<int>(components_.size()) + 1; }

  friend auto operator<=>(const FreeTypeRepr&, const FreeTypeRepr&) = default;

 private:
  std::vector<unsigned> components_;
};

/// Minimal homogeneous representation (q; w_1..w_n), weights non-decreasing.
class MinHomRepr {
 public:
  MinHomRepr(BigInt quota, std::vector<BigInt> weights)
      : quota_(std::move(quota)), weights_(std::move(weights)) {
    if (weights_.empty()) throw MalformedRepresentation("weight vector is empty");
    if (weights_.front() != 1) throw MalformedRepresentation("lightest weight must be 1");
    BigInt total = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i] <= 0) throw MalformedRepresentation("weights must be positive");
      if (i > 0 && weights_[i] < weights_[i - 1]) {
        throw MalformedRepresentation("weights must be non-decreasing");
      }
      total += weights_[i];
    }
    if ((total & 1) == 0) throw MalformedRepresentation("sum of weights must be odd");
    if (quota_ != (total + 1) / 2) {
      throw MalformedRepresentation("quota must equal (1 + sum of weights) / 2");
    }
  }

  const BigInt& quota() const noexcept { return quota_; }
  std::span<const BigInt> weights() const noexcept { return weights_; }
  int players() const noexcept { return static_cast<int>(weights_.size()); }

  BigInt total_weight() const {
    return std::accumulate(weights_.begin(), weights_.end(), BigInt(0));
  }

  friend bool operator==(const MinHomRepr&, const MinHomRepr&) = default;

 private:
  BigInt quota_;
  std::vector<BigInt> weights_;
};

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

/// [1,0] ++ fb ++ [0,1].
inline FullBinaryRepr lift_free_binary(const FreeBinaryRepr& fb) {
  std::vector<Bit> bits;
  bits.reserve(fb.size() + 4);
  bits.push_back(1);
  bits.push_back(0);
  bits.insert(bits.end(), fb.bits().begin(), fb.bits().end());
  bits.push_back(0);
  bits.push_back(1);
  return FullBinaryRepr(std::move(bits));
}

inline FreeBinaryRepr drop_to_free(const FullBinaryRepr& b) {
  return FreeBinaryRepr(std::vector<Bit>(b.bits().begin() + 2, b.bits().end() - 2));
}

/// Checks the four fixed bits, then strips them.
inline FreeBinaryRepr drop_to_free(std::span<const Bit> bits) {
  return drop_to_free(FullBinaryRepr(std::vector<Bit>(bits.begin(), bits.end())));
}

/// Differences of consecutive 1-bit positions; the trailing x_h = 1 is implied.
inline FreeTypeRepr binary_to_type(const FullBinaryRepr& b) {
  std::vector<unsigned> x;
  std::size_t previous = 0;  // b_1 = 1 always
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i] == 1) {
      x.push_back(static_cast<unsigned>(i - previous));
      previous = i;
    }
  }
  return FreeTypeRepr(std::move(x));
}

/// 1-bits at I_t = 1 + x_1 + ... + x_{t-1}; I_h = n.
inline FullBinaryRepr type_to_binary(const FreeTypeRepr& x) {
  std::vector<Bit> bits(static_cast<std::size_t>(x.players()), 0);
  std::size_t pos = 0;
  bits[pos] = 1;
  for (unsigned xt : x.components()) {
    pos += xt;
    bits[pos] = 1;
  }
  return FullBinaryRepr(std::move(bits));
}

/**
 * Type weights w_0..w_h of the recursion
 *
 *   w_0 = 0, w_1 = 1,
 *   w_t = x_{t-1} w_{t-1} + w_{t-2}        for t = 2..h-1,
 *   w_h = (x_{h-1} - 1) w_{h-1} + w_{h-2}.
 *
 * The returned vector is indexed by t, so element 0 is the dummy weight 0.
 */
inline std::vector<BigInt> type_weights(const FreeTypeRepr& x) {
  const std::size_t h = x.size() + 1;
  std::vector<BigInt> w(h + 1);
  w[0] = 0;
  w[1] = 1;
  for (std::size_t t = 2; t < h; ++t) {
    w[t] = BigInt(x[t - 2]) * w[t - 1] + w[t - 2];
  }
  w[h] = BigInt(x[h - 2] - 1) * w[h - 1] + w[h - 2];
  return w;
}

/// Minimal homogeneous representation: type weight t repeated x_t times.
inline MinHomRepr type_to_weights(const FreeTypeRepr& x) {
  const std::vector<BigInt> tw = type_weights(x);
  std::vector<BigInt> weights;
  weights.reserve(static_cast<std::size_t>(x.players()));
  BigInt total = 0;
  for (std::size_t t = 1; t <= x.size(); ++t) {
    for (unsigned r = 0; r < x[t - 1]; ++r) {
      weights.push_back(tw[t]);
      total += tw[t];
    }
  }
  weights.push_back(tw.back());
  total += tw.back();
  return MinHomRepr((total + 1) / 2, std::move(weights));
}

// ---------------------------------------------------------------------------
// Game
// ---------------------------------------------------------------------------

/// A parsimonious game keyed by its free type vector.
class Game {
 public:
  explicit Game(FreeTypeRepr free_type)
      : free_type_(std::move(free_type)),
        n_(free_type_.players()),
        h_(free_type_.types()) {}

  static Game from_free_binary(const FreeBinaryRepr& fb) {
    return Game(binary_to_type(lift_free_binary(fb)));
  }

  const FreeTypeRepr& free_type() const noexcept { return free_type_; }

  int players() const noexcept { return n_; }
  int types() const noexcept { return h_; }
  int m() const noexcept { return n_ - 4; }
  int k() const noexcept { return h_ - 2; }

  FullBinaryRepr full_binary() const { return type_to_binary(free_type_); }
  FreeBinaryRepr free_binary() const { return drop_to_free(full_binary()); }
  MinHomRepr weights() const { return type_to_weights(free_type_); }

  friend bool operator==(const Game& a, const Game& b) { return a.free_type_ == b.free_type_; }
  friend auto operator<=>(const Game& a, const Game& b) { return a.free_type_ <=> b.free_type_; }

 private:
  FreeTypeRepr free_type_;
  int n_;
  int h_;
};

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Largest free-bit length whose index space fits in 64 bits with headroom.
inline constexpr int kMaxEnumerableFreeBits = 62;

/**
 * All 2^{n-4} free binary vectors of an n-player game, in lexicographic
 * order (0 < 1, first bit most significant). A range may be restricted to
 * a half-open index window [first, last) so independent workers can split
 * the space.
 */
class FreeBinaryRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = FreeBinaryRepr;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = FreeBinaryRepr;

    iterator() = default;
    iterator(int bits, std::uint64_t index) : bits_(bits), index_(index) {}

    FreeBinaryRepr operator*() const { return FreeBinaryRange::at(bits_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++index_;
      return tmp;
    }
    std::uint64_t index() const noexcept { return index_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    int bits_ = 0;
    std::uint64_t index_ = 0;
  };

  explicit FreeBinaryRange(int n) : bits_(checked_bits(n)), first_(0), last_(std::uint64_t{1} << bits_) {}

  FreeBinaryRange(int n, std::uint64_t first, std::uint64_t last) : FreeBinaryRange(n) {
    if (first > last || last > last_) throw DomainError("enumeration window out of range");
    first_ = first;
    last_ = last;
  }

  iterator begin() const { return iterator(bits_, first_); }
  iterator end() const { return iterator(bits_, last_); }
  std::uint64_t size() const noexcept { return last_ - first_; }

  /// The vector with the given lexicographic index among m-bit vectors.
  static FreeBinaryRepr at(int bits, std::uint64_t index) {
    std::vector<Bit> v(static_cast<std::size_t>(bits));
    for (int j = 0; j < bits; ++j) {
      v[static_cast<std::size_t>(j)] = static_cast<Bit>((index >> (bits - 1 - j)) & 1u);
    }
    return FreeBinaryRepr(std::move(v));
  }

 private:
  static int checked_bits(int n) {
    if (n < 4) throw DomainError("parsimonious games need at least 4 players, got n = " + std::to_string(n));
    if (n - 4 > kMaxEnumerableFreeBits) {
      throw CapacityError("enumeration index space exceeds 64 bits", kMaxEnumerableFreeBits + 4);
    }
    return n - 4;
  }

  int bits_;
  std::uint64_t first_;
  std::uint64_t last_;
};

inline FreeBinaryRange enumerate_free_binaries(int n) { return FreeBinaryRange(n); }

}  // namespace parsigames

#endif  // PARSIGAMES_REPRESENTATIONS_HPP
