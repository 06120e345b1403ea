#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ucg/appendage.hpp"
#include "ucg/brute_force.hpp"
#include "ucg/construction.hpp"
#include "ucg/cover_search.hpp"
#include "ucg/families.hpp"
#include "ucg/io.hpp"
#include "ucg/report.hpp"

namespace ucg {

namespace cli_detail {

inline std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

inline VertexSet parse_vertex_list(const std::string& s, int n) {
  VertexSet out;
  if (s.empty()) return out;
  for (const std::string& tok : split(s, ",")) {
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v >= n) throw Error(ErrorCode::InvalidCovering, "bad vertex '" + tok + "' in list '" + s + "'");
    out.insert(v);
  }
  return out;
}

inline std::vector<VertexSet> parse_blocks(const std::string& s, int n) {
  std::vector<VertexSet> out;
  for (const std::string& b : split(s, ";|")) out.push_back(parse_vertex_list(b, n));
  return out;
}

inline CondSet parse_conditions(const std::string& s) {
  CondSet out;
  for (const std::string& tok : split(s, ",")) {
    Condition c;
    if (tok == "a") c = Condition::A;
    else if (tok == "b") c = Condition::B;
    else if (tok == "a1") c = Condition::Aprime;
    else if (tok == "b1") c = Condition::Bprime;
    else if (tok == "a2") c = Condition::Adp;
    else if (tok == "b2") c = Condition::Bdp;
    else throw Error(ErrorCode::MalformedInput, "unknown condition '" + tok + "' (use a,b,a1,b1,a2,b2)");
    out = out.with(c);
  }
  return out;
}

inline bool usage_error(ErrorCode c) {
  return c == ErrorCode::MalformedInput || c == ErrorCode::InvalidCovering || c == ErrorCode::InvalidDrop ||
         c == ErrorCode::InvalidGraph || c == ErrorCode::TooManyVertices;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  f << text;
}

}  // namespace cli_detail

/// Runs one `ucg` invocation (`args` excludes the program name). Returns the
/// exit code: 0 ok, 1 domain outcome (infinite, infeasible, not verified,
/// bound exceeded), 2 usage or parse error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Uniform central graph toolkit"};
  app.require_subcommand(1);

  std::string center, periphery, graph_arg, json_path, dot_path, conditions, drop, cover_arg, q0_arg, q1_arg;
  std::string out_dir = "fixtures";
  int rho = 2;
  int k = 0;
  int t_max = 2;
  int bound = 0;
  int iota = -1;
  bool exact = false;
  bool cone = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--json", json_path, "also write the JSON report here");
    sub->add_option("--bound", bound, "search bound (vertex count, or free pairs for oracle)");
  };
  CLI::App* analyze = app.add_subcommand("analyze", "center, centered periphery, strata");
  analyze->add_option("--graph,--periphery", graph_arg, "graph to analyse")->required();
  analyze->add_option("--dot", dot_path, "write DOT here");
  common(analyze);

  CLI::App* cover = app.add_subcommand("cover", "minimum covering sizes, or a single size-k decision");
  cover->add_option("--periphery,--graph", periphery, "graph P")->required();
  cover->add_option("--k", k, "decide coverings with exactly k blocks");
  cover->add_option("--conditions", conditions, "with --k: comma list of a,b,a1,b1,a2,b2");
  common(cover);

  CLI::App* append = app.add_subcommand("append", "appendage number A_ucg(C,P), A_ucg(C,-) or A_ucg(-,P)");
  append->add_option("--center", center, "graph C");
  append->add_option("--periphery", periphery, "graph P");
  append->add_flag("--exact", exact, "skip the (diam, r) table rows and run the covering decisions");
  append->add_option("--dot", dot_path, "write the witness as DOT here");
  common(append);

  CLI::App* construct = app.add_subcommand("construct", "build and verify a witness graph");
  construct->add_option("--center", center, "graph C")->required();
  construct->add_option("--periphery", periphery, "graph P")->required();
  construct->add_option("--rho", rho, "spine length");
  construct->add_option("--drop", drop, "apex-spine positions j to delete, e.g. 1,2");
  construct->add_option("--cover", cover_arg, "blocks such as 0,1;2,3 (default: a minimum condition-A covering)");
  construct->add_option("--iota", iota, "refined block index; builds the refined scaffold");
  construct->add_option("--q0", q0_arg, "Q0 vertices");
  construct->add_option("--q1", q1_arg, "Q1 vertices");
  construct->add_flag("--cone", cone, "build the cone over P instead");
  construct->add_option("--dot", dot_path, "write DOT here");
  common(construct);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force appendage number");
  oracle->add_option("--center", center, "graph C")->required();
  oracle->add_option("--periphery", periphery, "graph P")->required();
  oracle->add_option("--tmax", t_max, "largest number of added vertices to try");
  common(oracle);

  CLI::App* families = app.add_subcommand("families", "write the named fixtures as graph6 plus a manifest");
  families->add_option("--out", out_dir, "output directory");
  common(families);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  json report{{"schema", kReportSchema}};
  {
    std::string echo;
    for (const std::string& a : args) echo += (echo.empty() ? "" : " ") + a;
    report["command"] = echo;
  }
  int code = 0;
  try {
    json inputs = json::object();
    json result;
    if (analyze->parsed()) {
      const Graph g = load_graph(graph_arg);
      inputs["graph"] = encode_graph6(g);
      result = to_json(ucg_analysis(g), g);
      if (!dot_path.empty()) write_file(dot_path, to_dot(g));
    } else if (cover->parsed()) {
      const Graph p = load_graph(periphery);
      inputs["periphery"] = encode_graph6(p);
      SearchBounds b = SearchBounds::defaults();
      if (bound > 0) b.max_n_k2 = b.max_n_k3 = bound;
      if (k > 0) {
        const CondSet conds = parse_conditions(conditions.empty() ? "a,b" : conditions);
        const CovSizeResult r = decide_cover_k(p, k, conds, b);
        result = to_json(r);
        if (!r.exact()) code = 1;
      } else {
        if (!conditions.empty()) throw Error(ErrorCode::MalformedInput, "--conditions needs --k");
        const CovProfile prof = cov_profile(p, b);
        result = to_json(prof);
        if (prof.A.kind == CovKind::Infeasible) code = 1;
      }
    } else if (append->parsed()) {
      if (center.empty() && periphery.empty()) throw Error(ErrorCode::MalformedInput, "append needs --center and/or --periphery");
      if (!periphery.empty() && center.empty()) {
        const Graph p = load_graph(periphery);
        inputs["periphery"] = encode_graph6(p);
        const PeripheryOnlyResult r = appendage_periphery_only(p);
        result = json{{"mode", "periphery-only"}, {"value", to_json(r.value)}};
        if (r.witness) result["witness"] = to_json(*r.witness);
        if (!r.value.is_finite()) code = 1;
      } else if (periphery.empty()) {
        const Graph c = load_graph(center);
        inputs["center"] = encode_graph6(c);
        const CenterOnlyResult r = appendage_center_only(c);
        result = json{{"mode", "center-only"},
                      {"value", r.value},
                      {"witness", to_json(r.witness)},
                      {"verification", to_json(r.verification)}};
        if (!dot_path.empty()) write_file(dot_path, to_dot(r.witness));
      } else {
        const Graph c = load_graph(center);
        const Graph p = load_graph(periphery);
        inputs["center"] = encode_graph6(c);
        inputs["periphery"] = encode_graph6(p);
        AppendageOptions opt;
        opt.use_table_shortcuts = !exact;
        if (bound > 0) opt.bounds.max_n_k2 = opt.bounds.max_n_k3 = bound;
        const AppendageResult r = appendage_number(c, p, opt);
        result = to_json(r);
        if (!r.value.is_finite()) code = 1;
        if (r.witness && !dot_path.empty()) write_file(dot_path, to_dot(*r.witness));
      }
    } else if (construct->parsed()) {
      const Graph c = load_graph(center);
      const Graph p = load_graph(periphery);
      inputs["center"] = encode_graph6(c);
      inputs["periphery"] = encode_graph6(p);
      Scaffold s;
      if (cone) {
        s = build_cone(p);
      } else {
        std::vector<VertexSet> blocks;
        if (!cover_arg.empty()) {
          blocks = parse_blocks(cover_arg, p.n());
        } else {
          const CovSizeResult ka = cov_A(p);
          if (!ka.witness) throw Error(ErrorCode::DomainError, "P has radius <= 1: no condition-A covering to build on");
          blocks = ka.witness->blocks();
        }
        const Covering cov(p, blocks);
        if (iota >= 0) {
          const RefinedCovering rc(cov, static_cast<std::size_t>(iota), parse_vertex_list(q0_arg, p.n()),
                                   parse_vertex_list(q1_arg, p.n()));
          s = build_refined_scaffold(c, p, rc);
          result["covering"] = to_json(rc);
        } else {
          std::vector<int> drops;
          if (!drop.empty())
            for (int v : parse_vertex_list(drop, rho + 1)) drops.push_back(v);
          s = build_scaffold(c, p, cov, rho, drops);
          result["covering"] = to_json(cov);
          result["rho"] = rho;
          result["drop"] = drops;
        }
      }
      const VerificationReport v = verify_construction(s, c, p);
      result["scaffold"] = to_json(s);
      result["verification"] = to_json(v);
      if (!v.verified()) code = 1;
      if (!dot_path.empty()) write_file(dot_path, to_dot(s));
    } else if (oracle->parsed()) {
      const Graph c = load_graph(center);
      const Graph p = load_graph(periphery);
      inputs["center"] = encode_graph6(c);
      inputs["periphery"] = encode_graph6(p);
      const OracleResult r = brute_force_appendage(c, p, t_max, bound > 0 ? bound : 24);
      result = to_json(r);
      if (!r.found) code = 1;
    } else if (families->parsed()) {
      std::filesystem::create_directories(out_dir);
      json manifest = json::array();
      for (const Fixture& f : all_fixtures()) {
        const std::string g6 = encode_graph6(f.graph);
        write_file((std::filesystem::path(out_dir) / (f.name + ".g6")).string(), g6 + "\n");
        json entry{{"name", f.name}, {"graph6", g6}, {"provenance", f.provenance}};
        if (!f.extras.empty()) {
          json extras = json::object();
          for (const auto& [key, set] : f.extras) extras[key] = to_json(set);
          entry["extras"] = extras;
        }
        manifest.push_back(entry);
      }
      // The figure-5 refinement travels as extras on its own entry.
      const Fixture f5 = fixture_fig5_partition();
      json extras = json::object();
      for (const auto& [key, set] : f5.extras) extras[key] = to_json(set);
      manifest.push_back({{"name", f5.name}, {"graph6", encode_graph6(f5.graph)}, {"provenance", f5.provenance},
                          {"extras", extras}});
      write_file((std::filesystem::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
      result = json{{"directory", out_dir}, {"fixtures", manifest}};
    }
    report["inputs"] = inputs;
    report["result"] = result;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return usage_error(e.code()) ? 2 : 1;
  }
  report["timingMs"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const std::string text = report.dump(2);
  out << text << "\n";
  if (!json_path.empty()) {
    try {
      write_file(json_path, text + "\n");
    } catch (const Error& e) {
      err << e.what() << "\n";
      return 2;
    }
  }
  return code;
}

}  // namespace ucg
