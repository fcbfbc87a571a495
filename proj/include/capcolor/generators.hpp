#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "capcolor/error.hpp"
#include "capcolor/graph.hpp"
#include "capcolor/oracles.hpp"

namespace capcolor::gen {

inline Graph cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "cycle length must be at least 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edge_list(n, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

// Hajós construction on two K4's {x,a,b,y1} and {x,c,d,y2}: drop x-y1 and
// x-y2, identify the two x's, join y1-y2. Ids: x=0 y1=1 a=2 b=3 y2=4 c=5 d=6.
inline Graph hajos() {
  enum : Vertex { x, y1, a, b, y2, c, d };
  return Graph::from_edge_list(7, {{x, a}, {x, b}, {a, b}, {a, y1}, {b, y1},
                                   {x, c}, {x, d}, {c, d}, {c, y2}, {d, y2},
                                   {y1, y2}});
}

// Replaces vertex v of g by a clique of sizes[v] vertices; two cliques are
// complete when their originals are adjacent and anti-complete otherwise.
// Vertex v's clique takes the ids following those of v-1.
inline Graph blowup(const Graph& g, const std::vector<std::size_t>& sizes) {
  if (sizes.size() != g.n()) {
    throw Error(ErrorKind::InvalidParameter, "need one size per vertex: " + std::to_string(g.n()) + " expected, " +
                                                 std::to_string(sizes.size()) + " given");
  }
  std::vector<std::size_t> offset(g.n() + 1, 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (sizes[v] == 0) throw Error(ErrorKind::InvalidParameter, "clique size 0 for vertex " + std::to_string(v));
    offset[v + 1] = offset[v] + sizes[v];
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.n(); ++v) {
    for (std::size_t i = offset[v]; i < offset[v + 1]; ++i) {
      for (std::size_t j = i + 1; j < offset[v + 1]; ++j) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  for (const auto& [u, v] : g.edges()) {
    for (std::size_t i = offset[u]; i < offset[u + 1]; ++i) {
      for (std::size_t j = offset[v]; j < offset[v + 1]; ++j) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph::from_edge_list(offset.back(), edges);
}

// G_k: the 5-hole with every vertex replaced by a clique of size 2k.
// 10k vertices, clique number 4k, independence number 2, chromatic number 5k.
inline Graph c5_clique_blowup(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidParameter, "k must be positive");
  return blowup(cycle(5), std::vector<std::size_t>(5, 2 * k));
}

namespace detail {

// mt19937_64 is fully specified by the standard; the distributions are
// not, so bounded draws are done here to keep output identical across
// standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

inline constexpr std::size_t kDefaultMaxAttach = 8;

// Grows a chordal graph one simplicial vertex at a time: vertex v picks an
// earlier vertex w and attaches to a random nonempty subset (at most
// max_attach vertices) of the clique formed by w and w's own attachment.
// The reverse insertion order is a perfect elimination ordering.
inline Graph random_chordal(std::size_t n, std::uint64_t seed, std::size_t max_attach = kDefaultMaxAttach) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "random_chordal needs n >= 1");
  if (max_attach < 1) throw Error(ErrorKind::InvalidParameter, "max_attach must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> attach(n);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    auto w = static_cast<Vertex>(detail::uniform_below(rng, v));
    std::vector<Vertex> clique = attach[w];
    clique.push_back(w);
    std::size_t take = 1 + detail::uniform_below(rng, std::min(clique.size(), max_attach));
    for (std::size_t i = 0; i < take; ++i) {
      std::size_t j = i + detail::uniform_below(rng, clique.size() - i);
      std::swap(clique[i], clique[j]);
    }
    clique.resize(take);
    std::sort(clique.begin(), clique.end());
    for (Vertex u : clique) edges.emplace_back(u, v);
    attach[v] = std::move(clique);
  }
  return Graph::from_edge_list(n, edges);
}

inline constexpr std::size_t kMaxRandomInClassVertices = 14;

// Erdős–Rényi G(n, p) draws, rejected until one is verified
// (even-hole, cap)-free by exhaustive search. Absent after max_tries.
inline std::optional<Graph> random_in_class(std::size_t n, double edge_prob, std::uint64_t seed,
                                            std::size_t max_tries,
                                            std::uint64_t budget = kDefaultOracleBudget) {
  if (n > kMaxRandomInClassVertices) {
    throw Error(ErrorKind::InvalidParameter, "random_in_class is limited to " +
                                                 std::to_string(kMaxRandomInClassVertices) + " vertices");
  }
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(ErrorKind::InvalidParameter, "edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (detail::uniform_unit(rng) < edge_prob) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edge_list(n, edges);
    if (classify_membership(g, budget).in_class) return g;
  }
  return std::nullopt;
}

enum class Family { Cycle, Complete, Hajos, Gk, Blowup, RandomChordal, RandomInClass };

inline std::optional<Family> parse_family(std::string_view name) {
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "hajos") return Family::Hajos;
  if (name == "gk") return Family::Gk;
  if (name == "blowup") return Family::Blowup;
  if (name == "random_chordal") return Family::RandomChordal;
  if (name == "random_in_class") return Family::RandomInClass;
  return std::nullopt;
}

// Parameters per family:
//   cycle n | complete n | hajos | gk k
//   blowup: the n-cycle with every vertex replaced by a k-clique
//   random_chordal: n, seed, k = max attachment size (default 8)
//   random_in_class: n, p, seed, tries
struct GenSpec {
  Family family = Family::Cycle;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t tries = 1000;
};

// Absent only for random_in_class when every draw was rejected.
inline std::optional<Graph> generate(const GenSpec& spec) {
  auto need = [](const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw Error(ErrorKind::InvalidParameter, std::string("missing ") + flag);
    return *v;
  };
  switch (spec.family) {
    case Family::Cycle: return cycle(need(spec.n, "--n"));
    case Family::Complete: return complete(need(spec.n, "--n"));
    case Family::Hajos: return hajos();
    case Family::Gk: return c5_clique_blowup(need(spec.k, "--k"));
    case Family::Blowup: {
      auto base = cycle(need(spec.n, "--n"));
      return blowup(base, std::vector<std::size_t>(base.n(), need(spec.k, "--k")));
    }
    case Family::RandomChordal:
      return random_chordal(need(spec.n, "--n"), spec.seed, spec.k.value_or(kDefaultMaxAttach));
    case Family::RandomInClass:
      return random_in_class(need(spec.n, "--n"), spec.p, spec.seed, spec.tries);
  }
  return std::nullopt;
}

}  // namespace capcolor::gen
