#pragma once

// Exhaustive, desk-scale recognizers and exact invariants. These are the
// independent checks every fast routine in the library is tested against;
// none of them shares code with the coloring pipeline beyond Graph.

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "capcolor/color_map.hpp"
#include "capcolor/error.hpp"
#include "capcolor/graph.hpp"

namespace capcolor {

// Node expansions allowed per search when the caller gives no budget.
inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

inline constexpr std::size_t kMaxChromaticOracleVertices = 20;
inline constexpr std::size_t kMaxCliqueOracleVertices = 64;
inline constexpr std::size_t kMaxCutsetOracleVertices = 14;

struct HoleWitness {
  // Cyclic order; cycle.front() is the smallest vertex.
  std::vector<Vertex> cycle;

  friend bool operator==(const HoleWitness&, const HoleWitness&) = default;
};

struct CapWitness {
  HoleWitness hole;
  Vertex apex = 0;

  friend bool operator==(const CapWitness&, const CapWitness&) = default;
};

struct ClassReport {
  std::optional<HoleWitness> even_hole;
  std::optional<CapWitness> cap;
  bool in_class = false;
  bool search_exhausted = false;
};

inline bool is_valid_hole(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  for (Vertex v : cycle) {
    if (v >= g.n()) return false;
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (cycle[i] == cycle[j]) return false;
      bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

inline bool is_valid_cap(const Graph& g, const CapWitness& w) {
  const auto& cycle = w.hole.cycle;
  if (!is_valid_hole(g, cycle) || w.apex >= g.n()) return false;
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] == w.apex) return false;
    if (g.adjacent(w.apex, cycle[i])) hits.push_back(i);
  }
  if (hits.size() != 2) return false;
  return hits[1] == hits[0] + 1 || (hits[0] == 0 && hits[1] == cycle.size() - 1);
}

namespace detail {

class ExpansionBudget {
 public:
  explicit ExpansionBudget(std::uint64_t limit) : left_(limit) {}
  void tick(const char* what) {
    if (left_ == 0) throw Error(ErrorKind::BudgetExceeded, std::string(what) + " search budget exhausted");
    --left_;
  }

 private:
  std::uint64_t left_;
};

// Canonical induced-cycle enumeration: the root is the cycle's minimum
// vertex, all other vertices exceed it, and the second vertex is smaller
// than the last. DFS in ascending neighbor order, so the first hit is the
// lexicographically smallest encoding.
class EvenHoleSearch {
 public:
  EvenHoleSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget), on_path_(g.n(), 0) {}

  std::optional<HoleWitness> run() {
    for (Vertex r = 0; r < g_.n(); ++r) {
      root_ = r;
      path_.assign(1, r);
      on_path_[r] = 1;
      for (Vertex p1 : g_.neighbors(r)) {
        if (p1 <= r) continue;
        budget_.tick("even-hole");
        push(p1);
        if (extend()) return HoleWitness{path_};
        pop();
      }
      on_path_[r] = 0;
    }
    return std::nullopt;
  }

 private:
  void push(Vertex v) {
    path_.push_back(v);
    on_path_[v] = 1;
  }
  void pop() {
    on_path_[path_.back()] = 0;
    path_.pop_back();
  }

  // True with path_ holding the witness once an even hole closes.
  bool extend() {
    const Vertex last = path_.back();
    for (Vertex x : g_.neighbors(last)) {
      if (x <= root_ || on_path_[x]) continue;
      budget_.tick("even-hole");
      bool chord = false;
      for (std::size_t j = 1; j + 1 < path_.size(); ++j) {
        if (g_.adjacent(x, path_[j])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (g_.adjacent(x, root_)) {
        // x closes the cycle root, p1, ..., last, x.
        const std::size_t len = path_.size() + 1;
        if (len >= 4 && len % 2 == 0 && path_[1] < x) {
          push(x);
          return true;
        }
        continue;
      }
      push(x);
      if (extend()) return true;
      pop();
    }
    return false;
  }

  const Graph& g_;
  ExpansionBudget budget_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  Vertex root_ = 0;
};

// For each triangle (apex w, hole edge u<v) look for an induced u-v path
// with at least three edges whose interior avoids N[w].
class CapSearch {
 public:
  CapSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget), on_path_(g.n(), 0) {}

  std::optional<CapWitness> run() {
    for (Vertex w = 0; w < g_.n(); ++w) {
      apex_ = w;
      auto nbrs = g_.neighbors(w);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
          if (!g_.adjacent(nbrs[i], nbrs[j])) continue;
          budget_.tick("cap");
          source_ = nbrs[i];
          target_ = nbrs[j];
          path_.assign(1, source_);
          on_path_[source_] = 1;
          bool found = extend();
          if (found) {
            for (Vertex v : path_) on_path_[v] = 0;
            return CapWitness{HoleWitness{rotate_to_min(path_)}, w};
          }
          on_path_[source_] = 0;
        }
      }
    }
    return std::nullopt;
  }

 private:
  static std::vector<Vertex> rotate_to_min(std::vector<Vertex> cycle) {
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    // Orient so that the second vertex is smaller than the last.
    if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
  }

  bool extend() {
    const Vertex last = path_.back();
    for (Vertex x : g_.neighbors(last)) {
      if (x == target_ || x == apex_ || on_path_[x] || g_.adjacent(x, apex_)) continue;
      budget_.tick("cap");
      bool chord = false;
      for (std::size_t j = 0; j + 1 < path_.size(); ++j) {
        if (g_.adjacent(x, path_[j])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (g_.adjacent(x, target_)) {
        // path_ + x + target has path_.size() + 1 edges.
        if (path_.size() >= 2) {
          path_.push_back(x);
          on_path_[x] = 1;
          path_.push_back(target_);
          return true;
        }
        continue;
      }
      path_.push_back(x);
      on_path_[x] = 1;
      if (extend()) return true;
      on_path_[x] = 0;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  ExpansionBudget budget_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  Vertex apex_ = 0;
  Vertex source_ = 0;
  Vertex target_ = 0;
};

}  // namespace detail

// Absent means no even hole exists. Throws BudgetExceeded when the search
// could not finish, which is not the same as "none found".
inline std::optional<HoleWitness> find_even_hole(const Graph& g,
                                                 std::uint64_t budget = kDefaultOracleBudget) {
  return detail::EvenHoleSearch(g, budget).run();
}

inline std::optional<CapWitness> find_cap(const Graph& g, std::uint64_t budget = kDefaultOracleBudget) {
  return detail::CapSearch(g, budget).run();
}

inline ClassReport classify_membership(const Graph& g, std::uint64_t budget = kDefaultOracleBudget) {
  ClassReport report;
  bool exhausted = true;
  try {
    report.even_hole = find_even_hole(g, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    exhausted = false;
  }
  try {
    report.cap = find_cap(g, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    exhausted = false;
  }
  report.search_exhausted = exhausted;
  report.in_class = exhausted && !report.even_hole && !report.cap;
  return report;
}

// Maximum cardinality search, smallest id on ties. Returns the elimination
// order (reverse visit order) when it is a perfect elimination ordering.
inline std::optional<std::vector<Vertex>> is_chordal(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<std::set<Vertex>> buckets(n + 1);
  for (Vertex v = 0; v < n; ++v) buckets[0].insert(v);
  std::size_t top = 0;
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    while (buckets[top].empty()) --top;
    Vertex v = *buckets[top].begin();
    buckets[top].erase(buckets[top].begin());
    visited[v] = 1;
    visit.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (visited[w]) continue;
      buckets[weight[w]].erase(w);
      ++weight[w];
      buckets[weight[w]].insert(w);
      top = std::max(top, weight[w]);
    }
  }
  std::vector<Vertex> order(visit.rbegin(), visit.rend());
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  // Zero fill: the later neighbors of v, minus the earliest of them (p),
  // must all be adjacent to p.
  for (Vertex v = 0; v < n; ++v) {
    std::optional<Vertex> parent;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && (!parent || pos[w] < pos[*parent])) parent = w;
    }
    if (!parent) continue;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && w != *parent && !g.adjacent(*parent, w)) return std::nullopt;
    }
  }
  return order;
}

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> rows(g.n(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v : g.neighbors(u)) rows[u] |= Mask{1} << v;
  }
  return rows;
}

// Branch and bound with a greedy-coloring bound over the candidate set.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(std::vector<Mask> rows) : rows_(std::move(rows)) {}

  Mask run() {
    Mask all = rows_.empty() ? 0 : (rows_.size() == 64 ? ~Mask{0} : (Mask{1} << rows_.size()) - 1);
    expand(0, all);
    return best_;
  }

 private:
  int color_bound(Mask candidates) const {
    int colors = 0;
    while (candidates) {
      ++colors;
      Mask uncolored = candidates;
      while (uncolored) {
        int v = std::countr_zero(uncolored);
        uncolored &= ~(Mask{1} << v);
        uncolored &= ~rows_[v];
        candidates &= ~(Mask{1} << v);
      }
    }
    return colors;
  }

  void expand(Mask current, Mask candidates) {
    if (!candidates) {
      if (std::popcount(current) > std::popcount(best_)) best_ = current;
      return;
    }
    if (std::popcount(current) + color_bound(candidates) <= std::popcount(best_)) return;
    while (candidates) {
      if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best_)) return;
      int v = std::countr_zero(candidates);
      Mask bit = Mask{1} << v;
      expand(current | bit, candidates & rows_[v]);
      candidates &= ~bit;
    }
  }

  std::vector<Mask> rows_;
  Mask best_ = 0;
};

inline Mask max_clique_mask(const Graph& g) {
  return MaxCliqueSearch(adjacency_masks(g)).run();
}

}  // namespace detail

inline std::size_t exact_clique_number(const Graph& g) {
  if (g.n() > kMaxCliqueOracleVertices) {
    throw Error(ErrorKind::TooLarge, "exact clique oracle limited to " +
                                         std::to_string(kMaxCliqueOracleVertices) + " vertices");
  }
  return static_cast<std::size_t>(std::popcount(detail::max_clique_mask(g)));
}

inline std::size_t exact_independence_number(const Graph& g) {
  if (g.n() > kMaxCliqueOracleVertices) {
    throw Error(ErrorKind::TooLarge, "exact independence oracle limited to " +
                                         std::to_string(kMaxCliqueOracleVertices) + " vertices");
  }
  return exact_clique_number(complement(g));
}

namespace detail {

// k-colorability by backtracking. A maximum clique is precolored
// 0..w-1 and every other vertex may open at most one new color, which
// removes color-permutation symmetry.
class ColorabilitySearch {
 public:
  ColorabilitySearch(const Graph& g, Mask clique) : g_(g), rows_(adjacency_masks(g)) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (clique >> v & 1U) order_.push_back(v);
    }
    fixed_ = order_.size();
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!(clique >> v & 1U)) rest.push_back(v);
    }
    // Most constrained first: degree into already-ordered vertices, then degree.
    Mask placed = clique;
    while (!rest.empty()) {
      auto best = rest.begin();
      auto score = [&](Vertex v) {
        return std::pair(std::popcount(rows_[v] & placed), static_cast<int>(g.degree(v)));
      };
      for (auto it = rest.begin(); it != rest.end(); ++it) {
        if (score(*it) > score(*best)) best = it;
      }
      placed |= Mask{1} << *best;
      order_.push_back(*best);
      rest.erase(best);
    }
  }

  bool colorable(std::size_t k) {
    if (fixed_ > k) return false;
    colors_.assign(g_.n(), -1);
    for (std::size_t i = 0; i < fixed_; ++i) colors_[order_[i]] = static_cast<int>(i);
    k_ = static_cast<int>(k);
    return assign(fixed_, static_cast<int>(fixed_));
  }

 private:
  bool assign(std::size_t index, int used) {
    if (index == order_.size()) return true;
    Vertex v = order_[index];
    std::uint32_t forbidden = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (colors_[w] >= 0) forbidden |= 1U << colors_[w];
    }
    int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden >> c & 1U) continue;
      colors_[v] = c;
      if (assign(index + 1, std::max(used, c + 1))) return true;
    }
    colors_[v] = -1;
    return false;
  }

  const Graph& g_;
  std::vector<Mask> rows_;
  std::vector<Vertex> order_;
  std::size_t fixed_ = 0;
  std::vector<int> colors_;
  int k_ = 0;
};

}  // namespace detail

inline std::size_t exact_chromatic_number(const Graph& g) {
  if (g.n() > kMaxChromaticOracleVertices) {
    throw Error(ErrorKind::TooLarge, "exact chromatic oracle limited to " +
                                         std::to_string(kMaxChromaticOracleVertices) + " vertices");
  }
  if (g.n() == 0) return 0;
  detail::Mask clique = detail::max_clique_mask(g);
  detail::ColorabilitySearch search(g, clique);
  for (std::size_t k = static_cast<std::size_t>(std::popcount(clique));; ++k) {
    if (search.colorable(k)) return k;
  }
}

// Errors: PartialColoring when some vertex of g has no color.
inline bool check_coloring(const Graph& g, const Coloring& c) {
  if (c.size() != g.n()) {
    throw Error(ErrorKind::PartialColoring, "coloring covers " + std::to_string(c.size()) +
                                                " vertices, graph has " + std::to_string(g.n()));
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (c[v] == kNoColor) throw Error(ErrorKind::PartialColoring, "vertex " + std::to_string(v) + " uncolored");
  }
  for (const auto& [u, v] : g.edges()) {
    if (c[u] == c[v]) return false;
  }
  return true;
}

// Smallest clique whose removal leaves a disconnected graph, with the
// empty set standing for "already disconnected". Brute force over all
// vertex subsets; test-scale only.
inline std::optional<VertexSet> find_clique_cutset_bruteforce(const Graph& g) {
  const std::size_t n = g.n();
  if (n > kMaxCutsetOracleVertices) {
    throw Error(ErrorKind::TooLarge, "clique cutset oracle limited to " +
                                         std::to_string(kMaxCutsetOracleVertices) + " vertices");
  }
  auto rows = detail::adjacency_masks(g);
  const detail::Mask all = (detail::Mask{1} << n) - 1;
  auto disconnected_without = [&](detail::Mask removed) {
    detail::Mask rest = all & ~removed;
    if (rest == 0) return false;
    detail::Mask reached = rest & (~rest + 1);
    detail::Mask frontier = reached;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      detail::Mask fresh = rows[v] & rest & ~reached;
      reached |= fresh;
      frontier |= fresh;
    }
    return reached != rest;
  };
  std::vector<detail::Mask> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (detail::Mask s = 0; s <= all; ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](detail::Mask a, detail::Mask b) { return std::popcount(a) < std::popcount(b); });
  for (detail::Mask s : subsets) {
    bool clique = true;
    for (detail::Mask t = s; t && clique; t &= t - 1) {
      int v = std::countr_zero(t);
      if ((s & ~(detail::Mask{1} << v) & ~rows[v]) != 0) clique = false;
    }
    if (!clique || !disconnected_without(s)) continue;
    std::vector<Vertex> members;
    for (detail::Mask t = s; t; t &= t - 1) members.push_back(static_cast<Vertex>(std::countr_zero(t)));
    return VertexSet::from_sorted(std::move(members));
  }
  return std::nullopt;
}

}  // namespace capcolor
