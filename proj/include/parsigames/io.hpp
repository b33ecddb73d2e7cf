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
 * \file parsigames/io.hpp
 *
 * \brief Text parsing, JSON, CSV, plain-table and Graphviz output.
 *
 * Big integers are always written as decimal strings in JSON so consumers
 * never lose precision. CSV follows the minimal RFC 4180 profile: a header
 * line, comma separators, LF line endings, no quoting (no field needs it).
 */

#ifndef PARSIGAMES_IO_HPP
#define PARSIGAMES_IO_HPP

#include <parsigames/census.hpp>
#include <parsigames/errors.hpp>
#include <parsigames/genealogy.hpp>
#include <parsigames/oracle.hpp>
#include <parsigames/pivots.hpp>
#include <parsigames/representations.hpp>
#include <parsigames/symmetry.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace parsigames {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// "2,2,1,3" -> (2,2,1,3).
inline FreeTypeRepr parse_free_type(std::string_view text) {
  std::vector<unsigned> x;
  for (std::string_view token : detail::split_commas(text)) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw MalformedRepresentation("free type component '" + std::string(token) +
                                    "' is not a positive integer");
    }
    x.push_back(value);
  }
  return FreeTypeRepr(std::move(x));
}

/// "10110" -> (1,0,1,1,0). The empty string is the empty vector.
inline std::vector<Bit> parse_bits(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw MalformedRepresentation("binary vector may only contain 0 and 1");
    bits.push_back(static_cast<Bit>(ch - '0'));
  }
  return bits;
}

inline BigInt parse_bigint(std::string_view token) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw MalformedRepresentation("'" + std::string(token) + "' is not a non-negative decimal integer");
  }
  return BigInt(std::string(token));
}

inline std::vector<BigInt> parse_weights(std::string_view text) {
  std::vector<BigInt> w;
  for (std::string_view token : detail::split_commas(text)) w.push_back(parse_bigint(token));
  return w;
}

inline std::string bits_to_string(std::span<const Bit> bits) {
  std::string s;
  for (Bit b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

template <class Range>
std::string join(const Range& values, std::string_view sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline Json game_to_json(const Game& g) {
  const MinHomRepr r = g.weights();
  Json weights = Json::array();
  for (const BigInt& w : r.weights()) weights.push_back(to_decimal(w));
  Json free_binary = Json::array();
  const FreeBinaryRepr fb = g.free_binary();
  for (Bit b : fb.bits()) free_binary.push_back(static_cast<int>(b));
  Json j;
  j["n"] = g.players();
  j["h"] = g.types();
  j["free_type"] = std::vector<unsigned>(g.free_type().components().begin(), g.free_type().components().end());
  j["free_binary"] = std::move(free_binary);
  j["quota"] = to_decimal(r.quota());
  j["weights"] = std::move(weights);
  j["self_twin"] = is_self_twin(g);
  return j;
}

inline Json report_to_json(const CertificationReport& report, bool emit_wm = false) {
  Json j;
  j["n"] = report.n;
  j["wm_count"] = report.wm_count;
  j["homogeneous"] = report.homogeneous;
  j["constant_sum"] = report.constant_sum;
  j["dummy_free"] = report.dummy_free;
  j["parsimonious"] = report.parsimonious;
  if (emit_wm) {
    Json wm = Json::array();
    for (Coalition s : report.wm_list) wm.push_back(s.mask());
    j["wm"] = std::move(wm);
  }
  return j;
}

/// Layers with parent indices and parity classes.
inline Json tree_to_json(const std::vector<GenerationLayer>& layers) {
  Json j;
  j["max_m"] = layers.empty() ? -1 : layers.back().m;
  Json out_layers = Json::array();
  for (const GenerationLayer& layer : layers) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < layer.nodes.size(); ++i) {
      const TreeNode& node = layer.nodes[i];
      Json jn;
      jn["index"] = i;
      jn["parent_index"] = node.parent_index ? Json(*node.parent_index) : Json(nullptr);
      jn["parity_class"] = parity_name(node.parity);
      jn["pivot"] = node.pivot ? Json(*node.pivot) : Json(nullptr);
      jn["game"] = game_to_json(node.game);
      nodes.push_back(std::move(jn));
    }
    Json jl;
    jl["m"] = layer.m;
    jl["n"] = layer.m + 4;
    jl["size"] = layer.nodes.size();
    jl["nodes"] = std::move(nodes);
    out_layers.push_back(std::move(jl));
  }
  j["layers"] = std::move(out_layers);
  return j;
}

/**
 * All games with n players, grouped by h. Within a group, self-twin games
 * come first, then twin pairs; each pair is listed once, led by the member
 * that comes first in free binary order.
 */
inline Json catalog_to_json(int n) {
  std::map<int, std::pair<Json, Json>> groups;  // h -> (self twins, pairs)
  std::size_t total = 0;
  std::size_t self_twins = 0;
  std::size_t pairs = 0;
  for (const FreeBinaryRepr& fb : enumerate_free_binaries(n)) {
    const Game g = Game::from_free_binary(fb);
    ++total;
    auto& [st, tp] = groups[g.types()];
    if (is_self_twin(g)) {
      st.push_back(game_to_json(g));
      ++self_twins;
      continue;
    }
    const Game t = twin(g);
    if (fb < t.free_binary()) {
      tp.push_back(Json::array({game_to_json(g), game_to_json(t)}));
      ++pairs;
    }
  }
  Json j;
  j["n"] = n;
  j["games"] = total;
  j["self_twin_count"] = self_twins;
  j["twin_pair_count"] = pairs;
  Json out_groups = Json::array();
  for (auto& [h, lists] : groups) {
    Json jg;
    jg["h"] = h;
    jg["self_twins"] = lists.first.is_null() ? Json::array() : lists.first;
    jg["twin_pairs"] = lists.second.is_null() ? Json::array() : lists.second;
    out_groups.push_back(std::move(jg));
  }
  j["groups"] = std::move(out_groups);
  return j;
}

// ---------------------------------------------------------------------------
// CSV and tables
// ---------------------------------------------------------------------------

inline void write_triangle_csv(std::ostream& os, const Triangle& t) {
  os << "m,k,value\n";
  for (int m = 0; m <= t.max_m(); ++m)
    for (int k = 0; k <= m; ++k) os << m << ',' << k << ',' << t.at(m, k) << '\n';
}

inline void write_triangle_table(std::ostream& os, const Triangle& t) {
  std::size_t width = 3;
  for (int m = 0; m <= t.max_m(); ++m)
    for (const BigInt& v : t.row(m)) width = std::max(width, to_decimal(v).size() + 1);
  auto pad = [&](const std::string& s) { os << std::string(width - std::min(width, s.size()), ' ') << s; };
  os << triangle_name(t.kind()) << '\n';
  pad("m\\k");
  os << " |";
  for (int k = 0; k <= t.max_m(); ++k) pad(std::to_string(k));
  os << '\n';
  for (int m = 0; m <= t.max_m(); ++m) {
    pad(std::to_string(m));
    os << " |";
    for (const BigInt& v : t.row(m)) pad(to_decimal(v));
    os << '\n';
  }
}

inline void write_pivots_csv(std::ostream& os, const PivotTriangle& t) {
  os << "m,c,value,repetitions\n";
  for (const PivotRow& row : t.rows)
    for (std::size_t c = 0; c < row.entries.size(); ++c)
      os << row.m << ',' << c + 1 << ',' << row.entries[c].value << ',' << row.entries[c].repetitions << '\n';
}

/// One line per generation: "m | 1(2) 3(1) 7(1)".
inline void write_pivots_table(std::ostream& os, const PivotTriangle& t) {
  os << (t.parity == PivotParity::Even ? "even" : "odd") << " generation pivots\n";
  for (const PivotRow& row : t.rows) {
    std::string m = std::to_string(row.m);
    os << std::string(m.size() < 3 ? 3 - m.size() : 0, ' ') << m << " |";
    for (const PivotEntry& e : row.entries) os << ' ' << e.value << '(' << e.repetitions << ')';
    os << '\n';
  }
}

inline void write_tree_dot(std::ostream& os, const std::vector<GenerationLayer>& layers) {
  auto id = [](int m, std::size_t i) { return "g" + std::to_string(m) + "_" + std::to_string(i); };
  os << "digraph genealogy {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const GenerationLayer& layer : layers) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < layer.nodes.size(); ++i) os << ' ' << id(layer.m, i) << ';';
    os << " }\n";
    for (std::size_t i = 0; i < layer.nodes.size(); ++i) {
      const TreeNode& node = layer.nodes[i];
      os << "  " << id(layer.m, i) << " [label=\"(" << join(node.game.free_type().components()) << ")\"";
      if (node.parity == ParityClass::ESTP) os << ", style=dashed";
      os << "];\n";
      if (node.parent_index) os << "  " << id(layer.m - 1, *node.parent_index) << " -> " << id(layer.m, i) << ";\n";
    }
  }
  os << "}\n";
}

}  // namespace parsigames

#endif  // PARSIGAMES_IO_HPP
