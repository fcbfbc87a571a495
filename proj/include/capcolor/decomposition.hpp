#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "capcolor/graph.hpp"

namespace capcolor {

// A minimal elimination ordering. order[0] is eliminated first;
// later_neighbors[v] lists v's neighbors in G + fill that are eliminated
// after v, ascending by vertex id.
struct EliminationOrdering {
  std::vector<Vertex> order;
  std::vector<Edge> fill;
  std::vector<std::vector<Vertex>> later_neighbors;
};

// LEX M (Rose, Tarjan, Lueker). Vertices are numbered n-1 down to 0; at
// each step the unnumbered vertex with the lexicographically largest label
// is chosen, smallest id on ties. Labels are kept as dense integer ranks
// and recompressed after every step, giving O(nm) overall.
inline EliminationOrdering lexm_minimal_ordering(const Graph& g) {
  const std::size_t n = g.n();
  EliminationOrdering out;
  out.order.assign(n, 0);
  out.later_neighbors.assign(n, {});

  std::vector<std::size_t> label(n, 0);
  std::size_t label_count = n ? 1 : 0;
  std::vector<char> numbered(n, 0);
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;
  std::vector<std::vector<Vertex>> reach;
  std::vector<Vertex> raised;
  std::vector<std::size_t> remap;

  for (std::size_t step = n; step-- > 0;) {
    Vertex v = 0;
    bool found = false;
    for (Vertex u = 0; u < n; ++u) {
      if (!numbered[u] && (!found || label[u] > label[v])) {
        v = u;
        found = true;
      }
    }
    numbered[v] = 1;
    out.order[step] = v;

    ++stamp;
    mark[v] = stamp;
    reach.assign(label_count, {});
    raised.clear();
    for (Vertex w : g.neighbors(v)) {
      if (numbered[w]) continue;
      mark[w] = stamp;
      reach[label[w]].push_back(w);
      raised.push_back(w);
    }
    for (std::size_t j = 0; j < label_count; ++j) {
      while (!reach[j].empty()) {
        Vertex w = reach[j].back();
        reach[j].pop_back();
        for (Vertex z : g.neighbors(w)) {
          if (numbered[z] || mark[z] == stamp) continue;
          mark[z] = stamp;
          if (label[z] > j) {
            reach[label[z]].push_back(z);
            raised.push_back(z);
          } else {
            reach[j].push_back(z);
          }
        }
      }
    }

    for (Vertex z : raised) {
      out.later_neighbors[z].push_back(v);
      if (!g.adjacent(v, z)) out.fill.emplace_back(std::min(v, z), std::max(v, z));
    }

    // Append `step` to the labels of raised vertices: 2l+1 sorts above 2l
    // and below 2(l+1), then compress back to consecutive ranks.
    for (Vertex u = 0; u < n; ++u) {
      if (!numbered[u]) label[u] *= 2;
    }
    for (Vertex z : raised) label[z] += 1;
    remap.assign(2 * label_count + 1, 0);
    for (Vertex u = 0; u < n; ++u) {
      if (!numbered[u]) remap[label[u]] = 1;
    }
    std::size_t next = 0;
    for (auto& r : remap) {
      std::size_t used = r;
      r = next;
      next += used;
    }
    for (Vertex u = 0; u < n; ++u) {
      if (!numbered[u]) label[u] = remap[label[u]];
    }
    label_count = std::max<std::size_t>(next, 1);
  }

  for (auto& later : out.later_neighbors) std::sort(later.begin(), later.end());
  std::sort(out.fill.begin(), out.fill.end());
  return out;
}

struct DecompositionNode {
  // Internal nodes: the clique separator. Leaves: empty.
  VertexSet separator;
  // Leaves: the atom. Internal nodes: empty.
  VertexSet atom;
  std::int32_t left = -1;
  std::int32_t right = -1;

  bool is_leaf() const noexcept { return left < 0; }
};

// Binary clique-separator tree over host vertex ids. For every internal
// node, left ∪ right covers the node's vertices and left ∩ right is the
// separator. Trees built here are left-deep per connected component (left
// children are atoms) and components are chained with empty separators.
struct DecompositionTree {
  std::vector<DecompositionNode> nodes;
  std::size_t root = 0;

  // Empty for the empty graph.
  std::vector<std::size_t> leaves() const {
    std::vector<std::size_t> out;
    if (nodes.empty()) return out;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      if (nodes[i].is_leaf()) {
        out.push_back(i);
      } else {
        stack.push_back(static_cast<std::size_t>(nodes[i].right));
        stack.push_back(static_cast<std::size_t>(nodes[i].left));
      }
    }
    return out;
  }

  VertexSet vertices_under(std::size_t node) const {
    std::vector<Vertex> all;
    std::vector<std::size_t> stack{node};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      if (nodes[i].is_leaf()) {
        all.insert(all.end(), nodes[i].atom.begin(), nodes[i].atom.end());
      } else {
        stack.push_back(static_cast<std::size_t>(nodes[i].left));
        stack.push_back(static_cast<std::size_t>(nodes[i].right));
      }
    }
    return VertexSet(std::move(all));
  }

  std::vector<VertexSet> atoms() const {
    std::vector<VertexSet> out;
    for (std::size_t i : leaves()) out.push_back(nodes[i].atom);
    return out;
  }
};

namespace detail {

// True when g - s has at least two components whose neighborhood is all
// of s. Uses and advances the caller's stamp array.
inline bool is_minimal_separator(const Graph& g, const VertexSet& s, std::vector<std::uint32_t>& mark,
                                 std::uint32_t& stamp) {
  if (s.empty()) return false;
  const std::uint32_t visited = ++stamp;
  for (Vertex v : s) mark[v] = visited;
  std::vector<Vertex> queue;
  std::vector<std::uint32_t> seen_from(s.size(), 0);
  std::uint32_t component = 0;
  int full = 0;
  // A full component touches s, so searches start from neighbors of s.
  for (Vertex sv : s) {
    for (Vertex start : g.neighbors(sv)) {
      if (mark[start] == visited) continue;
      ++component;
      std::size_t touched = 0;
      mark[start] = visited;
      queue.assign(1, start);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g.neighbors(queue[head])) {
          if (mark[w] != visited) {
            mark[w] = visited;
            queue.push_back(w);
          } else if (auto i = s.index_of(w); i && seen_from[*i] != component) {
            seen_from[*i] = component;
            ++touched;
          }
        }
      }
      if (touched == s.size() && ++full == 2) return true;
    }
  }
  return false;
}

}  // namespace detail

// Tarjan's clique-separator decomposition over a minimal ordering. The
// ordering is scanned front to back; at x, S = later_neighbors(x) is a
// candidate when it is a clique of g and a minimal separator of g (two
// full components). Restricting to minimal separators keeps atoms from
// nesting inside each other. The component C of the remaining graph minus
// S that contains x is split off as the atom C ∪ S whenever something
// else remains.
inline DecompositionTree clique_cutset_decompose(const Graph& g, const EliminationOrdering& ordering) {
  const std::size_t n = g.n();
  DecompositionTree tree;
  if (n == 0) return tree;

  const auto components = connected_components(g);
  struct Split {
    VertexSet separator;
    VertexSet atom;
  };
  std::vector<std::vector<Split>> chains(components.count());
  std::vector<std::size_t> remaining(components.count());
  for (std::size_t c = 0; c < components.count(); ++c) remaining[c] = components.components[c].size();

  std::vector<char> alive(n, 1);
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;
  std::vector<Vertex> queue;

  for (Vertex x : ordering.order) {
    const auto& later = ordering.later_neighbors[x];
    const std::size_t comp = components.component_of[x];
    VertexSet separator = VertexSet::from_sorted(later);
    if (!is_clique_set(g, separator) || !detail::is_minimal_separator(g, separator, mark, stamp)) continue;

    ++stamp;
    for (Vertex s : separator) mark[s] = stamp;
    queue.assign(1, x);
    mark[x] = stamp;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (alive[w] && mark[w] != stamp) {
          mark[w] = stamp;
          queue.push_back(w);
        }
      }
    }
    if (queue.size() + separator.size() == remaining[comp]) continue;

    for (Vertex v : queue) alive[v] = 0;
    remaining[comp] -= queue.size();
    VertexSet atom = VertexSet(queue).unite(separator);
    chains[comp].push_back({std::move(separator), std::move(atom)});
  }

  auto add_node = [&](DecompositionNode node) {
    tree.nodes.push_back(std::move(node));
    return static_cast<std::int32_t>(tree.nodes.size() - 1);
  };

  std::vector<std::int32_t> component_roots;
  for (std::size_t c = 0; c < components.count(); ++c) {
    std::vector<Vertex> rest;
    for (Vertex v : components.components[c]) {
      if (alive[v]) rest.push_back(v);
    }
    std::int32_t node = add_node({{}, VertexSet::from_sorted(std::move(rest)), -1, -1});
    for (auto it = chains[c].rbegin(); it != chains[c].rend(); ++it) {
      std::int32_t leaf = add_node({{}, std::move(it->atom), -1, -1});
      node = add_node({std::move(it->separator), {}, leaf, node});
    }
    component_roots.push_back(node);
  }
  std::int32_t root = component_roots.back();
  for (std::size_t c = component_roots.size() - 1; c-- > 0;) {
    root = add_node({{}, {}, component_roots[c], root});
  }
  tree.root = static_cast<std::size_t>(root);
  return tree;
}

inline DecompositionTree clique_cutset_decompose(const Graph& g) {
  return clique_cutset_decompose(g, lexm_minimal_ordering(g));
}

// Partition by closed-neighborhood equality (twins), with the quotient
// graph on class indices.
struct TwinPartition {
  // Ordered by smallest member.
  std::vector<VertexSet> classes;
  std::vector<std::uint32_t> class_of;
  Graph quotient;
};

inline TwinPartition twin_partition(const Graph& g) {
  const std::size_t n = g.n();
  auto closed = [&](Vertex v) {
    std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    return nb;
  };
  std::unordered_map<std::uint64_t, std::vector<Vertex>> buckets;
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ g.degree(v);
    for (Vertex w : closed(v)) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    buckets[h].push_back(v);
  }

  // Bucket members are ascending; split each bucket by exact comparison.
  std::vector<std::vector<Vertex>> groups;
  for (auto& [hash, members] : buckets) {
    std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> exact;
    for (Vertex v : members) {
      auto key = closed(v);
      auto it = std::find_if(exact.begin(), exact.end(), [&](const auto& e) { return e.first == key; });
      if (it == exact.end()) {
        exact.push_back({std::move(key), {v}});
      } else {
        it->second.push_back(v);
      }
    }
    for (auto& e : exact) groups.push_back(std::move(e.second));
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  TwinPartition tp;
  tp.class_of.assign(n, 0);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (Vertex v : groups[i]) tp.class_of[v] = static_cast<std::uint32_t>(i);
    tp.classes.push_back(VertexSet::from_sorted(std::move(groups[i])));
  }
  std::vector<Edge> quotient_edges;
  for (std::size_t i = 0; i < tp.classes.size(); ++i) {
    std::vector<Vertex> adj;
    for (Vertex w : g.neighbors(tp.classes[i].front())) {
      auto j = tp.class_of[w];
      if (j > i) adj.push_back(j);
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    for (Vertex j : adj) quotient_edges.emplace_back(static_cast<Vertex>(i), j);
  }
  tp.quotient = Graph::from_edge_list(tp.classes.size(), quotient_edges);
  return tp;
}

struct UniversalStrip {
  VertexSet remaining;
  // Ascending; each vertex was universal in the input graph.
  std::vector<Vertex> removed;
};

// Universality is tested against the input graph, not the shrinking
// remainder. No vertex of g[remaining] is universal in it: such a vertex
// would be adjacent to every removed vertex as well, hence universal in g.
inline UniversalStrip strip_universal_vertices(const Graph& g) {
  UniversalStrip out;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) + 1 == g.n()) {
      out.removed.push_back(v);
    } else {
      rest.push_back(v);
    }
  }
  out.remaining = VertexSet::from_sorted(std::move(rest));
  return out;
}

}  // namespace capcolor
