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
 * \file parsigames/genealogy.hpp
 *
 * \brief The genealogical tree of self-twin games.
 *
 * Generation m holds the self-twin games with n = m + 4 players. The tree
 * grows from the single game (3) by two parity-specific rules on the free
 * type vector:
 *
 *  - even generation, odd pivot p: two children, the vector with pivot p+1,
 *    and the same vector with that pivot split into (p+1)/2, (p+1)/2;
 *  - odd generation: one child, either the pivot incremented (odd-length
 *    parent) or a central 1 inserted (even-length parent).
 *
 * Nothing here consults is_self_twin(); the palindrome property is a
 * consequence of the rules and is checked independently by the tests.
 */

#ifndef PARSIGAMES_GENEALOGY_HPP
#define PARSIGAMES_GENEALOGY_HPP

#include <parsigames/errors.hpp>
#include <parsigames/representations.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parsigames {

/// OSTP: odd number of free type components (has a pivot). ESTP: even.
enum class ParityClass { OSTP, ESTP };

inline std::string_view parity_name(ParityClass p) { return p == ParityClass::OSTP ? "OSTP" : "ESTP"; }

inline ParityClass parity_class_of(const Game& g) {
  return g.free_type().size() % 2 == 1 ? ParityClass::OSTP : ParityClass::ESTP;
}

/// Central component of an odd-length free type vector.
inline unsigned pivot_of(const Game& g) {
  const auto& x = g.free_type();
  if (x.size() % 2 == 0) {
    throw ParityError("pivot is undefined for a free type vector with an even number of components");
  }
  return x[x.size() / 2];
}

struct TreeNode {
  Game game;
  int generation = 0;
  ParityClass parity = ParityClass::OSTP;
  std::optional<unsigned> pivot;
  /// Index into the previous layer; empty for the seed.
  std::optional<std::size_t> parent_index;
  /// Indices into the next layer, filled in when that layer is built.
  std::vector<std::size_t> children;
};

struct GenerationLayer {
  int m = 0;
  std::vector<TreeNode> nodes;
};

namespace detail {

inline TreeNode make_node(std::vector<unsigned> x, int generation) {
  Game g{FreeTypeRepr(std::move(x))};
  TreeNode node{std::move(g), generation, ParityClass::OSTP, std::nullopt, std::nullopt, {}};
  node.parity = parity_class_of(node.game);
  if (node.parity == ParityClass::OSTP) node.pivot = pivot_of(node.game);
  return node;
}

inline std::vector<unsigned> components_of(const TreeNode& node) {
  const auto x = node.game.free_type().components();
  return {x.begin(), x.end()};
}

}  // namespace detail

/// Generation 0: the four-player game (3).
inline TreeNode seed() { return detail::make_node({3}, 0); }

inline std::pair<TreeNode, TreeNode> breed_even(const TreeNode& parent) {
  if (parent.generation % 2 != 0) throw StructuralError("breed_even applied to an odd generation");
  if (parent.parity != ParityClass::OSTP || !parent.pivot) {
    throw StructuralError("even-generation parent must have an odd number of components");
  }
  const unsigned p = *parent.pivot;
  if (p % 2 == 0) throw StructuralError("even-generation pivot must be odd");

  std::vector<unsigned> x = detail::components_of(parent);
  const std::size_t center = x.size() / 2;
  x[center] = p + 1;
  TreeNode first = detail::make_node(x, parent.generation + 1);

  const unsigned half = (p + 1) / 2;
  x[center] = half;
  x.insert(x.begin() + static_cast<std::ptrdiff_t>(center), half);
  TreeNode second = detail::make_node(std::move(x), parent.generation + 1);
  return {std::move(first), std::move(second)};
}

inline TreeNode breed_odd(const TreeNode& parent) {
  if (parent.generation % 2 == 0) throw StructuralError("breed_odd applied to an even generation");
  std::vector<unsigned> x = detail::components_of(parent);
  if (parent.parity == ParityClass::OSTP) {
    if (!parent.pivot || *parent.pivot % 2 != 0) {
      throw StructuralError("odd-generation pivot must be even");
    }
    x[x.size() / 2] += 1;
  } else {
    x.insert(x.begin() + static_cast<std::ptrdiff_t>(x.size() / 2), 1u);
  }
  return detail::make_node(std::move(x), parent.generation + 1);
}

/// Children of every node of `layer`, in parent order (first child first).
inline GenerationLayer next_layer(GenerationLayer& layer) {
  GenerationLayer next{layer.m + 1, {}};
  next.nodes.reserve(layer.nodes.size() * (layer.m % 2 == 0 ? 2 : 1));
  for (std::size_t i = 0; i < layer.nodes.size(); ++i) {
    TreeNode& parent = layer.nodes[i];
    auto adopt = [&](TreeNode child) {
      child.parent_index = i;
      parent.children.push_back(next.nodes.size());
      next.nodes.push_back(std::move(child));
    };
    if (layer.m % 2 == 0) {
      auto [first, second] = breed_even(parent);
      adopt(std::move(first));
      adopt(std::move(second));
    } else {
      adopt(breed_odd(parent));
    }
  }
  return next;
}

/// Layers 0..max_m of the tree.
inline std::vector<GenerationLayer> build_tree(int max_m) {
  if (max_m < 0) throw DomainError("build_tree needs max_m >= 0");
  std::vector<GenerationLayer> layers;
  layers.reserve(static_cast<std::size_t>(max_m) + 1);
  layers.push_back({0, {seed()}});
  for (int m = 1; m <= max_m; ++m) layers.push_back(next_layer(layers.back()));
  return layers;
}

}  // namespace parsigames

#endif  // PARSIGAMES_GENEALOGY_HPP
