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

// Command-line front end. Every verb parses its flags, calls the library and
// formats the result; no counting or game logic lives here.
//
// Exit status: 0 success, 1 bad input or capacity limit, 2 internal
// invariant violation.

#ifndef PARSIGAMES_TOOLS_CLI_HPP
#define PARSIGAMES_TOOLS_CLI_HPP

#include <parsigames/parsigames.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace parsigames::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInvariant = 2;

namespace detail {

struct GameSource {
  std::string free_type;
  std::string free_binary;
  std::string binary;

  bool given() const { return !free_type.empty() || !free_binary.empty() || !binary.empty(); }

  Game resolve() const {
    if (!free_type.empty()) return Game(parse_free_type(free_type));
    if (!binary.empty()) return Game(binary_to_type(FullBinaryRepr(parse_bits(binary))));
    return Game::from_free_binary(FreeBinaryRepr(parse_bits(free_binary == "-" ? "" : free_binary)));
  }
};

// The empty free binary vector (n = 4) cannot be typed as an empty string on
// most shells, so "-" stands for it.
inline void add_game_source(CLI::App* cmd, GameSource& src) {
  auto* group = cmd->add_option_group("game", "the game to operate on");
  group->add_option("--free-type", src.free_type, "free type vector, e.g. 2,2,1,3");
  group->add_option("--free-binary", src.free_binary, "free binary vector, e.g. 10110 ('-' for n = 4)");
  group->add_option("--binary", src.binary, "full binary vector, e.g. 101011001");
  group->require_option(0, 1);
}

inline void write_game_text(std::ostream& out, const Game& g) {
  const MinHomRepr r = g.weights();
  out << "n=" << g.players() << '\n'
      << "h=" << g.types() << '\n'
      << "free_type=" << join(g.free_type().components()) << '\n'
      << "free_binary=" << bits_to_string(g.free_binary().bits()) << '\n'
      << "binary=" << bits_to_string(g.full_binary().bits()) << '\n'
      << "q=" << r.quota() << '\n'
      << "weights=" << join(r.weights()) << '\n'
      << "self_twin=" << (is_self_twin(g) ? "true" : "false") << '\n';
}

inline TriangleKind parse_triangle_kind(const std::string& s) {
  static const std::map<std::string, TriangleKind> kinds{
      {"c", TriangleKind::C}, {"gamma", TriangleKind::Gamma},
      {"delta", TriangleKind::Delta}, {"theta", TriangleKind::Theta}};
  return kinds.at(s);
}

inline Triangle triangle_by_method(TriangleKind kind, int max_m, const std::string& method, unsigned jobs) {
  if (method == "recurrence") return make_triangle(kind, max_m);
  if (method == "closed") {
    Triangle t(kind, max_m);
    const Triangle c = c_triangle(max_m);
    for (int m = 0; m <= max_m; ++m) {
      for (int k = 0; k <= m; ++k) {
        const BigInt gamma = gamma_closed(m, k);
        switch (kind) {
          case TriangleKind::C: t.at(m, k) = c_count(m, k); break;
          case TriangleKind::Gamma: t.at(m, k) = gamma; break;
          case TriangleKind::Delta: t.at(m, k) = c.at(m, k) - gamma; break;
          case TriangleKind::Theta: t.at(m, k) = (c.at(m, k) - gamma) / 2; break;
        }
      }
    }
    return t;
  }
  // enumeration
  Triangle t(kind, max_m);
  for (int m = 0; m <= max_m; ++m) {
    const CensusRow row = census_by_enumeration(m + 4, {kDefaultEnumerationMaxM, jobs});
    for (int k = 0; k <= m; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      switch (kind) {
        case TriangleKind::C: t.at(m, k) = row.total[ks]; break;
        case TriangleKind::Gamma: t.at(m, k) = row.self_twin[ks]; break;
        case TriangleKind::Delta: t.at(m, k) = row.total[ks] - row.self_twin[ks]; break;
        case TriangleKind::Theta: t.at(m, k) = row.twin_pairs[ks]; break;
      }
    }
  }
  return t;
}

inline void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open '" + path.string() + "' for writing");
  body(file);
  file.flush();
  if (!file) throw DomainError("failed writing '" + path.string() + "'");
}

}  // namespace detail

/// Runs action, mapping bad input to 1 and internal failures to 2.
inline int guarded(const std::function<int()>& action, std::ostream& err) {
  try {
    return action();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

/// Emits the fixed set of reference outputs into out_dir.
inline std::vector<std::filesystem::path> reproduce_paper(const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw DomainError("cannot create '" + out_dir.string() + "': " + ec.message());

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, const std::function<void(std::ostream&)>& body) {
    const auto path = out_dir / name;
    detail::write_file(path, body);
    written.push_back(path);
  };
  constexpr int kTableMaxM = 8;
  const DeltaTheta dt = delta_theta(kTableMaxM);
  emit("gamma.csv", [&](std::ostream& os) { write_triangle_csv(os, gamma_recurrence(kTableMaxM)); });
  emit("delta.csv", [&](std::ostream& os) { write_triangle_csv(os, dt.delta); });
  emit("theta.csv", [&](std::ostream& os) { write_triangle_csv(os, dt.theta); });
  emit("pivots_even.csv", [](std::ostream& os) { write_pivots_csv(os, closed_form_pivots(12, PivotParity::Even)); });
  emit("pivots_odd.csv", [](std::ostream& os) { write_pivots_csv(os, closed_form_pivots(9, PivotParity::Odd)); });
  emit("catalog_n8.json", [](std::ostream& os) { os << catalog_to_json(8).dump(2) << '\n'; });
  emit("catalog_n9.json", [](std::ostream& os) { os << catalog_to_json(9).dump(2) << '\n'; });
  emit("tree_m5.json", [](std::ostream& os) { os << tree_to_json(build_tree(5)).dump(2) << '\n'; });
  return written;
}

/// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of parsimonious games", "parsigames"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  std::function<int()> action;

  // convert
  detail::GameSource convert_src;
  std::string convert_format = "text";
  auto* convert = app.add_subcommand("convert", "convert between representations of one game");
  detail::add_game_source(convert, convert_src);
  convert->add_option("--format", convert_format)->check(CLI::IsMember({"text", "json"}));
  convert->callback([&] {
    action = [&] {
      if (!convert_src.given()) throw DomainError("convert needs --free-type, --free-binary or --binary");
      const Game g = convert_src.resolve();
      if (convert_format == "json") {
        out << game_to_json(g).dump() << '\n';
      } else {
        detail::write_game_text(out, g);
      }
      return kExitOk;
    };
  });

  // verify
  detail::GameSource verify_src;
  std::string verify_quota;
  std::string verify_weights;
  int verify_n = 0;
  bool verify_all = false;
  bool emit_wm = false;
  auto* verify = app.add_subcommand("verify", "certify games by brute force over all coalitions");
  detail::add_game_source(verify, verify_src);
  verify->add_option("--quota", verify_quota, "quota of a hand-written representation");
  verify->add_option("--weights", verify_weights, "weights of a hand-written representation, e.g. 1,1,1,2,2");
  verify->add_option("--n", verify_n, "number of players")->check(CLI::Range(4, kMaxOracleCap));
  verify->add_flag("--all", verify_all, "certify every game with --n players");
  verify->add_flag("--emit-wm", emit_wm, "include minimal winning coalitions as bitmasks");
  verify->callback([&] {
    action = [&] {
      const OracleConfig config = oracle_config_from_env();
      if (!verify_weights.empty() || !verify_quota.empty()) {
        if (verify_weights.empty() || verify_quota.empty()) throw DomainError("--quota and --weights go together");
        const MinHomRepr r(parse_bigint(verify_quota), parse_weights(verify_weights));
        out << report_to_json(certify(r, config), emit_wm).dump() << '\n';
        return kExitOk;
      }
      std::vector<Game> games;
      if (verify_all) {
        if (verify_n == 0) throw DomainError("--all needs --n");
        for (const FreeBinaryRepr& fb : enumerate_free_binaries(verify_n)) games.push_back(Game::from_free_binary(fb));
      } else if (verify_src.given()) {
        games.push_back(verify_src.resolve());
      } else {
        throw DomainError("verify needs a game, --n N --all, or --quota/--weights");
      }
      bool all_parsimonious = true;
      for (const Game& g : games) {
        const CertificationReport report = certify(g.weights(), config);
        all_parsimonious = all_parsimonious && report.parsimonious;
        out << report_to_json(report, emit_wm).dump() << '\n';
      }
      if (!all_parsimonious) {
        err << "error: a generated game failed certification\n";
        return kExitInvariant;
      }
      return kExitOk;
    };
  });

  // twin
  detail::GameSource twin_src;
  std::string twin_format = "text";
  auto* twin_cmd = app.add_subcommand("twin", "print the twin of a game and both quotas");
  detail::add_game_source(twin_cmd, twin_src);
  twin_cmd->add_option("--format", twin_format)->check(CLI::IsMember({"text", "json"}));
  twin_cmd->callback([&] {
    action = [&] {
      if (!twin_src.given()) throw DomainError("twin needs --free-type, --free-binary or --binary");
      const Game g = twin_src.resolve();
      const Game t = twin(g);
      if (twin_format == "json") {
        Json j;
        j["game"] = game_to_json(g);
        j["twin"] = game_to_json(t);
        j["same_quota"] = twin_quota_check(g);
        out << j.dump() << '\n';
      } else {
        out << "free_type=" << join(g.free_type().components()) << '\n'
            << "twin=" << join(t.free_type().components()) << '\n'
            << "quota=" << g.weights().quota() << '\n'
            << "twin_quota=" << t.weights().quota() << '\n'
            << "self_twin=" << (is_self_twin(g) ? "true" : "false") << '\n';
      }
      return kExitOk;
    };
  });

  // enumerate
  int enum_n = 0;
  std::string enum_format = "jsonl";
  bool self_twin_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "list every game with n players in free binary order");
  enumerate->add_option("--n", enum_n, "number of players")->required()->check(CLI::Range(4, 40));
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"jsonl", "csv"}));
  enumerate->add_flag("--self-twin-only", self_twin_only);
  enumerate->callback([&] {
    action = [&] {
      if (enum_format == "csv") out << "n,h,free_type,free_binary,quota,weights,self_twin\n";
      for (const FreeBinaryRepr& fb : enumerate_free_binaries(enum_n)) {
        const Game g = Game::from_free_binary(fb);
        if (self_twin_only && !is_self_twin(g)) continue;
        if (enum_format == "jsonl") {
          out << game_to_json(g).dump() << '\n';
          continue;
        }
        const MinHomRepr r = g.weights();
        out << g.players() << ',' << g.types() << ',' << join(g.free_type().components(), " ") << ','
            << bits_to_string(fb.bits()) << ',' << r.quota() << ',' << join(r.weights(), " ") << ','
            << (is_self_twin(g) ? "true" : "false") << '\n';
      }
      return kExitOk;
    };
  });

  // census
  int census_max_m = 8;
  std::string census_triangle = "gamma";
  std::string census_format = "table";
  std::string census_method = "recurrence";
  unsigned census_jobs = 1;
  auto* census = app.add_subcommand("census", "print a counting triangle");
  census->add_option("--max-m", census_max_m)->check(CLI::Range(0, 1000));
  census->add_option("--triangle", census_triangle)->check(CLI::IsMember({"c", "gamma", "delta", "theta"}));
  census->add_option("--format", census_format)->check(CLI::IsMember({"csv", "table"}));
  census->add_option("--method", census_method)->check(CLI::IsMember({"recurrence", "closed", "enumeration"}));
  census->add_option("--jobs", census_jobs, "worker threads for --method enumeration")->check(CLI::Range(1u, 256u));
  census->callback([&] {
    action = [&] {
      const Triangle t = detail::triangle_by_method(detail::parse_triangle_kind(census_triangle), census_max_m,
                                                    census_method, census_jobs);
      if (census_format == "csv") {
        write_triangle_csv(out, t);
      } else {
        write_triangle_table(out, t);
      }
      return kExitOk;
    };
  });

  // tree
  int tree_max_m = 5;
  std::string tree_format = "json";
  auto* tree = app.add_subcommand("tree", "generate the genealogical tree of self-twin games");
  tree->add_option("--max-m", tree_max_m)->check(CLI::Range(0, 40));
  tree->add_option("--format", tree_format)->check(CLI::IsMember({"json", "dot"}));
  tree->callback([&] {
    action = [&] {
      const auto layers = build_tree(tree_max_m);
      if (tree_format == "dot") {
        write_tree_dot(out, layers);
      } else {
        out << tree_to_json(layers).dump(2) << '\n';
      }
      return kExitOk;
    };
  });

  // pivots
  int pivots_max_m = 12;
  std::string pivots_parity = "even";
  std::string pivots_format = "table";
  std::string pivots_source = "closed";
  auto* pivots = app.add_subcommand("pivots", "print a pivot triangle");
  pivots->add_option("--max-m", pivots_max_m)->check(CLI::Range(0, 60));
  pivots->add_option("--parity", pivots_parity)->check(CLI::IsMember({"even", "odd"}));
  pivots->add_option("--format", pivots_format)->check(CLI::IsMember({"csv", "table"}));
  pivots->add_option("--source", pivots_source, "closed forms or harvest from the tree")
      ->check(CLI::IsMember({"closed", "tree"}));
  pivots->callback([&] {
    action = [&] {
      const PivotParity parity = pivots_parity == "even" ? PivotParity::Even : PivotParity::Odd;
      PivotTriangle t;
      if (pivots_source == "tree") {
        HarvestedPivots h = harvest_pivots(build_tree(pivots_max_m));
        t = parity == PivotParity::Even ? std::move(h.even) : std::move(h.odd);
      } else {
        t = closed_form_pivots(pivots_max_m, parity);
      }
      if (pivots_format == "csv") {
        write_pivots_csv(out, t);
      } else {
        write_pivots_table(out, t);
      }
      return kExitOk;
    };
  });

  // reproduce-paper
  std::string out_dir;
  auto* reproduce = app.add_subcommand("reproduce-paper", "write the reference tables, catalogs and tree");
  reproduce->add_option("--out", out_dir, "output directory")->required();
  reproduce->callback([&] {
    action = [&] {
      for (const auto& path : reproduce_paper(out_dir)) out << path.string() << '\n';
      return kExitOk;
    };
  });

  std::vector<std::string> argv_storage{"parsigames"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  return guarded(action, err);
}

}  // namespace parsigames::cli

#endif  // PARSIGAMES_TOOLS_CLI_HPP
