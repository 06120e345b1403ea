#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "ucg/error.hpp"
#include "ucg/families.hpp"
#include "ucg/graph.hpp"

namespace ucg {

inline std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph parse_graph6(std::string text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  if (text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
  if (text.empty()) throw Error(ErrorCode::MalformedInput, "empty graph6 string");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw Error(ErrorCode::MalformedInput, "graph6 character out of range");
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw Error(ErrorCode::MalformedInput, "unsupported graph6 size prefix");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[static_cast<std::size_t>(k)] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "graph6 graph has " + std::to_string(n) + " vertices");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars)
    throw Error(ErrorCode::MalformedInput, "graph6 length does not match n = " + std::to_string(n));
  std::vector<Graph::Edge> edges;
  std::size_t k = 0;
  auto bit = [&](std::size_t idx) { return ((text[pos + idx / 6] - 63) >> (5 - idx % 6)) & 1; };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bit(k)) edges.emplace_back(i, j);
  for (; k < chars * 6; ++k)
    if (bit(k)) throw Error(ErrorCode::MalformedInput, "nonzero graph6 padding bits");
  return Graph::from_edges(n, edges);
}

/// "n m" header, then m lines "u v" (0-based). '#' starts a comment.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream lines(text);
  std::vector<long> nums;
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string tok;
    while (row >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        throw Error(ErrorCode::MalformedInput, "edge list token '" + tok + "' is not an integer");
      }
      if (used != tok.size() || v < 0) throw Error(ErrorCode::MalformedInput, "bad edge list token '" + tok + "'");
      nums.push_back(v);
    }
  }
  if (nums.size() < 2) throw Error(ErrorCode::MalformedInput, "edge list needs an 'n m' header");
  const long n = nums[0];
  const long m = nums[1];
  if (n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "edge list graph has " + std::to_string(n) + " vertices");
  if (static_cast<long>(nums.size()) != 2 + 2 * m)
    throw Error(ErrorCode::MalformedInput, "edge list header promises " + std::to_string(m) + " edges");
  std::vector<Graph::Edge> edges;
  for (long e = 0; e < m; ++e) {
    const long u = nums[static_cast<std::size_t>(2 + 2 * e)];
    const long v = nums[static_cast<std::size_t>(3 + 2 * e)];
    if (u >= n || v >= n) throw Error(ErrorCode::MalformedInput, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::MalformedInput, "self-loop in edge list");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

/// Built-in names: k<N>, p<N> (path), c<N>, star<N>, e<N> (edgeless), 2k1,
/// 2k2, prism<M>, hex_prism, hept_prism, figure1, palpha<A>, palphabeta<A>_<B>.
inline std::optional<Graph> named_graph(const std::string& name) {
  std::smatch m;
  auto num = [&](std::size_t i) { return std::stoi(m[i].str()); };
  if (name == "2k1") return empty_graph(2);
  if (name == "2k2") return disjoint_union(complete_graph(2), complete_graph(2));
  if (name == "figure1") return fixture_figure1().graph;
  if (name == "hex_prism") return gen_prism(6).graph;
  if (name == "hept_prism") return gen_prism(7).graph;
  if (std::regex_match(name, m, std::regex(R"(k([0-9]+))"))) return complete_graph(num(1));
  if (std::regex_match(name, m, std::regex(R"(p([0-9]+))"))) return path_graph(num(1));
  if (std::regex_match(name, m, std::regex(R"(c([0-9]+))"))) return cycle_graph(num(1));
  if (std::regex_match(name, m, std::regex(R"(e([0-9]+))"))) return empty_graph(num(1));
  if (std::regex_match(name, m, std::regex(R"(star([0-9]+))"))) return star_graph(num(1));
  if (std::regex_match(name, m, std::regex(R"(prism([0-9]+))"))) return gen_prism(num(1)).graph;
  if (std::regex_match(name, m, std::regex(R"(palpha([0-9]+))"))) return gen_P_alpha(num(1)).graph;
  if (std::regex_match(name, m, std::regex(R"(palphabeta([0-9]+)_([0-9]+))")))
    return gen_P_alpha_beta(num(1), num(2)).graph;
  return std::nullopt;
}

/// Reads a graph argument: "g6:<string>", a built-in name, or a file holding
/// graph6 (first line) or an edge list.
inline Graph load_graph(const std::string& spec) {
  if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3));
  std::ifstream in(spec);
  if (!in) {
    if (auto g = named_graph(spec)) return *g;
    throw Error(ErrorCode::MalformedInput, "'" + spec + "' is neither a file nor a known graph name");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::istringstream probe(text);
  std::string first;
  while (std::getline(probe, first)) {
    if (auto hash = first.find('#'); hash != std::string::npos) first.erase(hash);
    if (first.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  const bool numeric = first.find_first_not_of("0123456789 \t\r") == std::string::npos;
  if (numeric) return parse_edge_list(text);
  return parse_graph6(first);
}

}  // namespace ucg
