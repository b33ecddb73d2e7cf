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

// Grows the self-twin tree a few generations and prints each game with its
// weights, then certifies the last layer with the brute-force oracle.

#include <parsigames/parsigames.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  using namespace parsigames;
  const int max_m = argc > 1 ? std::atoi(argv[1]) : 5;
  if (max_m < 0 || max_m > 12) {
    std::cerr << "usage: genealogy_walk [max_m in 0..12]\n";
    return 1;
  }

  const auto layers = build_tree(max_m);
  for (const GenerationLayer& layer : layers) {
    std::cout << "m=" << layer.m << " (n=" << layer.m + 4 << ", " << layer.nodes.size() << " games)\n";
    for (const TreeNode& node : layer.nodes) {
      const MinHomRepr r = node.game.weights();
      std::cout << "  (" << join(node.game.free_type().components(), ",") << ")  " << parity_name(node.parity)
                << "  q=" << to_decimal(r.quota()) << "  w=" << join(r.weights(), ",") << '\n';
    }
  }

  std::size_t certified = 0;
  for (const TreeNode& node : layers.back().nodes) {
    if (certify(node.game.weights()).parsimonious) ++certified;
  }
  std::cout << certified << "/" << layers.back().nodes.size() << " games in the last layer certified\n";
  return certified == layers.back().nodes.size() ? 0 : 2;
}
