#include "ccent/graph_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace ccent {

namespace {

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

struct Tokenizer {
  const std::string& s;
  std::size_t pos = 0;

  bool next(std::string_view& tok) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    if (pos >= s.size()) return false;
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t' && s[pos] != '\r') ++pos;
    tok = std::string_view(s).substr(start, pos - start);
    return true;
  }
};

std::int64_t parse_i64(std::string_view tok, const std::string& path, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.begin(), tok.end(), value);
  if (ec != std::errc() || ptr != tok.end()) fail(path, line, "expected integer, got '" + std::string(tok) + "'");
  return value;
}

Length parse_length(std::string_view tok, const std::string& path, std::size_t line) {
  const std::int64_t v = parse_i64(tok, path, line);
  if (v < 0) fail(path, line, "negative edge length " + std::to_string(v));
  if (v > std::numeric_limits<Length>::max())
    fail(path, line, "edge length " + std::to_string(v) + " exceeds 32-bit range");
  return static_cast<Length>(v);
}

double parse_double(std::string_view tok, const std::string& path, std::size_t line) {
  // from_chars for double is missing in some libstdc++ versions; strtod via a
  // NUL-terminated copy is fine at parse-time scale.
  std::string buf(tok);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) fail(path, line, "expected number, got '" + buf + "'");
  return v;
}

}  // namespace

GraphFormat parse_format(const std::string& name) {
  if (name == "dimacs-gr") return GraphFormat::kDimacsGr;
  if (name == "edge-list") return GraphFormat::kEdgeList;
  if (name == "weighted-edge-list") return GraphFormat::kWeightedEdgeList;
  throw std::invalid_argument("unknown graph format '" + name + "'");
}

LoadedGraph load_graph(const std::string& path, GraphFormat format, bool directed) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");

  std::vector<Edge> edges;
  IdMap ids;
  std::string line;
  std::size_t lineno = 0;

  if (format == GraphFormat::kDimacsGr) {
    std::int64_t declared_n = -1;
    std::int64_t declared_m = -1;
    while (std::getline(in, line)) {
      ++lineno;
      Tokenizer tz{line};
      std::string_view tok;
      if (!tz.next(tok)) continue;
      if (tok == "c" || tok[0] == '#') continue;
      if (tok == "p") {
        std::string_view kind, ns, ms;
        if (!tz.next(kind) || !tz.next(ns) || !tz.next(ms)) fail(path, lineno, "malformed problem line");
        declared_n = parse_i64(ns, path, lineno);
        declared_m = parse_i64(ms, path, lineno);
        if (declared_n < 0 || declared_n > std::numeric_limits<NodeId>::max() - 1)
          fail(path, lineno, "node count out of range");
        continue;
      }
      if (tok == "a") {
        if (declared_n < 0) fail(path, lineno, "arc before problem line");
        std::string_view us, vs, ws;
        if (!tz.next(us) || !tz.next(vs) || !tz.next(ws)) fail(path, lineno, "malformed arc line");
        const std::int64_t u = parse_i64(us, path, lineno);
        const std::int64_t v = parse_i64(vs, path, lineno);
        if (u < 1 || u > declared_n || v < 1 || v > declared_n)
          fail(path, lineno, "node id outside declared range [1, " + std::to_string(declared_n) + "]");
        edges.push_back(Edge{static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1),
                             parse_length(ws, path, lineno)});
        continue;
      }
      fail(path, lineno, "unrecognized line type '" + std::string(tok) + "'");
    }
    if (declared_n < 0) throw ParseError(path + ": missing problem line");
    if (declared_m >= 0 && static_cast<std::size_t>(declared_m) != edges.size())
      throw ParseError(path + ": arc count " + std::to_string(edges.size()) +
                       " does not match declared " + std::to_string(declared_m));
    ids.to_input.resize(declared_n);
    for (std::int64_t i = 0; i < declared_n; ++i) ids.to_input[i] = i + 1;
    return {Graph::build(static_cast<NodeId>(declared_n), directed, edges), std::move(ids)};
  }

  const bool weighted = format == GraphFormat::kWeightedEdgeList;
  std::unordered_map<std::int64_t, NodeId> remap;
  auto intern = [&](std::int64_t input) -> NodeId {
    auto [it, inserted] = remap.try_emplace(input, static_cast<NodeId>(ids.to_input.size()));
    if (inserted) {
      if (ids.to_input.size() >= std::numeric_limits<NodeId>::max() - 1)
        throw ParseError(path + ": too many distinct node ids");
      ids.to_input.push_back(input);
    }
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    Tokenizer tz{line};
    std::string_view tok;
    if (!tz.next(tok)) continue;
    if (tok[0] == '#') continue;
    std::string_view vs, ws;
    if (!tz.next(vs)) fail(path, lineno, "expected two node ids");
    Length len = 1;
    if (weighted) {
      if (!tz.next(ws)) fail(path, lineno, "expected weight column");
      len = parse_length(ws, path, lineno);
    }
    std::string_view extra;
    if (tz.next(extra)) fail(path, lineno, "trailing token '" + std::string(extra) + "'");
    const NodeId u = intern(parse_i64(tok, path, lineno));
    const NodeId v = intern(parse_i64(vs, path, lineno));
    edges.push_back(Edge{u, v, len});
  }
  return {Graph::build(static_cast<NodeId>(ids.to_input.size()), directed, edges), std::move(ids)};
}

std::vector<double> load_node_weights(const std::string& path, const IdMap& ids,
                                      double default_weight) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");

  std::unordered_map<std::int64_t, NodeId> lookup;
  lookup.reserve(ids.to_input.size());
  for (NodeId v = 0; v < ids.to_input.size(); ++v) lookup.emplace(ids.to_input[v], v);

  std::vector<double> beta(ids.to_input.size(), default_weight);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    Tokenizer tz{line};
    std::string_view tok;
    if (!tz.next(tok)) continue;
    if (tok[0] == '#') continue;
    std::string_view wtok;
    if (!tz.next(wtok)) fail(path, lineno, "expected 'node_id weight'");
    const std::int64_t id = parse_i64(tok, path, lineno);
    const double w = parse_double(wtok, path, lineno);
    if (w < 0) fail(path, lineno, "negative node weight");
    auto it = lookup.find(id);
    if (it == lookup.end()) fail(path, lineno, "unknown node id " + std::to_string(id));
    beta[it->second] = w;
  }
  return beta;
}

}  // namespace ccent
