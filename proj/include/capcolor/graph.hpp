#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "capcolor/error.hpp"

namespace capcolor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free set of vertex ids. Iteration is ascending.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  // All of {0..n-1}.
  static VertexSet range(std::size_t n) {
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    return from_sorted(std::move(all));
  }

  // Caller guarantees `members` is strictly ascending.
  static VertexSet from_sorted(std::vector<Vertex> members) {
    VertexSet s;
    s.members_ = std::move(members);
    return s;
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  // Position of `v` in the ascending member list, if present.
  std::optional<std::size_t> index_of(Vertex v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
  }

  VertexSet unite(const VertexSet& other) const {
    std::vector<Vertex> out;
    out.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  VertexSet intersect(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  VertexSet minus(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  bool includes(const VertexSet& other) const {
    return std::includes(begin(), end(), other.begin(), other.end());
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Finite simple undirected graph on vertices {0..n-1}. Immutable once built.
//
// Adjacency is kept as sorted neighbor lists; graphs up to kDenseLimit
// vertices also carry one adjacency bitset row per vertex so that
// adjacent() is a single word probe. Larger graphs fall back to binary
// search in the neighbor list.
class Graph {
 public:
  static constexpr std::size_t kDenseLimit = 20000;

  Graph() = default;

  // Errors: InvalidVertex (endpoint >= n), InvalidEdge (self-loop),
  // DuplicateEdge (same unordered pair listed twice).
  static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs) {
    Graph g;
    g.n_ = n;
    g.m_ = pairs.size();
    g.adj_.assign(n, {});
    for (const auto& [u, v] : pairs) {
      if (u >= n || v >= n) {
        throw Error(ErrorKind::InvalidVertex, "edge (" + std::to_string(u) + "," +
                                                  std::to_string(v) + ") outside 0.." +
                                                  std::to_string(n) + "-1");
      }
      if (u == v) throw Error(ErrorKind::InvalidEdge, "self-loop at " + std::to_string(u));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
      auto& list = g.adj_[v];
      std::sort(list.begin(), list.end());
      auto dup = std::adjacent_find(list.begin(), list.end());
      if (dup != list.end()) {
        throw Error(ErrorKind::DuplicateEdge, "edge (" + std::to_string(std::min(v, *dup)) +
                                                  "," + std::to_string(std::max(v, *dup)) +
                                                  ") listed twice");
      }
    }
    g.build_bits();
    return g;
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> pairs) {
    return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const {
    if (!bits_.empty()) return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  // Edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.adj_ == b.adj_;
  }

 private:
  void build_bits() {
    if (n_ == 0 || n_ > kDenseLimit) return;
    words_ = (n_ + 63) / 64;
    bits_.assign(n_ * words_, 0);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

// An induced subgraph plus the order-preserving id map back to the host.
struct InducedSubgraph {
  Graph graph;
  // host[i] is the host id of local vertex i; ascending.
  VertexSet host;

  std::optional<Vertex> local(Vertex host_vertex) const {
    auto i = host.index_of(host_vertex);
    if (!i) return std::nullopt;
    return static_cast<Vertex>(*i);
  }
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.back() >= g.n()) {
    throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(s.back()) +
                                              " not in graph of order " + std::to_string(g.n()));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Vertex u = s[i];
    // Scan whichever side is shorter: the neighbor list or the later members.
    if (g.degree(u) <= s.size() - i) {
      for (Vertex w : g.neighbors(u)) {
        if (w <= u) continue;
        if (auto j = s.index_of(w)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(*j));
      }
    } else {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (g.adjacent(u, s[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return {Graph::from_edge_list(s.size(), edges), s};
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(g.n(), edges);
}

struct ComponentPartition {
  std::vector<std::uint32_t> component_of;
  // Ordered by smallest member.
  std::vector<VertexSet> components;

  std::size_t count() const noexcept { return components.size(); }
};

inline ComponentPartition connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  ComponentPartition out;
  out.component_of.assign(g.n(), kUnset);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (out.component_of[root] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(out.components.size());
    queue.assign(1, root);
    out.component_of[root] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (out.component_of[w] == kUnset) {
          out.component_of[w] = id;
          queue.push_back(w);
        }
      }
    }
    out.components.push_back(VertexSet(std::move(queue)));
    queue = {};
  }
  return out;
}

// Empty sets and singletons are cliques.
inline bool is_clique_set(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.back() >= g.n()) {
    throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(s.back()) + " out of range");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (g.degree(s[i]) + 1 < s.size()) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

}  // namespace capcolor
