#pragma once

#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "capcolor/error.hpp"
#include "capcolor/graph.hpp"

namespace capcolor {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                    std::string(tok) + "'",
                line_no);
  }
  return value;
}

}  // namespace detail

// Reads the DIMACS edge format: "c" comment lines, one "p edge N M"
// header, then M lines "e U V" with 1-based endpoints. "p col" is
// accepted as a synonym for "p edge".
inline Graph parse_dimacs(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t declared_m = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  auto fail = [&](const std::string& msg) -> void {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg, line_no);
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) fail("duplicate 'p' line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) fail("expected 'p edge N M'");
      n = detail::parse_count(tok[2], line_no);
      declared_m = detail::parse_count(tok[3], line_no);
      if (n > std::numeric_limits<Vertex>::max()) fail("vertex count too large");
      have_header = true;
      edges.reserve(std::min<std::uint64_t>(declared_m, 1U << 22));
    } else if (tok[0] == "e") {
      if (!have_header) fail("edge line before 'p' header");
      if (tok.size() != 3) fail("expected 'e U V'");
      auto u = detail::parse_count(tok[1], line_no);
      auto v = detail::parse_count(tok[2], line_no);
      if (u == 0 || v == 0 || u > n || v > n) {
        throw Error(ErrorKind::InvalidVertex,
                    "line " + std::to_string(line_no) + ": endpoint outside 1.." + std::to_string(n),
                    line_no);
      }
      if (u == v) {
        throw Error(ErrorKind::InvalidEdge,
                    "line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u),
                    line_no);
      }
      auto a = static_cast<Vertex>(std::min(u, v) - 1);
      auto b = static_cast<Vertex>(std::max(u, v) - 1);
      if (!seen.insert((std::uint64_t{a} << 32) | b).second) {
        throw Error(ErrorKind::DuplicateEdge,
                    "line " + std::to_string(line_no) + ": edge " + std::to_string(a + 1) + " " +
                        std::to_string(b + 1) + " repeated",
                    line_no);
      }
      edges.emplace_back(a, b);
    } else {
      fail("unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) {
    throw Error(ErrorKind::ParseError, "missing 'p edge N M' header", line_no);
  }
  if (edges.size() != declared_m) {
    throw Error(ErrorKind::CountMismatch, "header declares " + std::to_string(declared_m) +
                                              " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edge_list(n, edges);
}

inline Graph parse_dimacs(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_dimacs(std::string_view(text));
}

// Canonical form: header, then one "e" line per edge sorted by
// (min, max) endpoint, 1-based, LF-terminated.
inline std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  out.reserve(out.size() + g.m() * 14);
  for (const auto& [u, v] : g.edges()) {
    out += "e ";
    out += std::to_string(u + 1);
    out += ' ';
    out += std::to_string(v + 1);
    out += '\n';
  }
  return out;
}

}  // namespace capcolor
