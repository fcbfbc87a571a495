#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "capcolor/color_map.hpp"
#include "capcolor/decomposition.hpp"
#include "capcolor/error.hpp"
#include "capcolor/graph.hpp"
#include "capcolor/oracles.hpp"

namespace capcolor {

// ---------------------------------------------------------------------------
// Smallest-last ordering and greedy coloring
// ---------------------------------------------------------------------------

// order[0..n-1] = v_1..v_n where v_i has minimum degree in G[v_1..v_i].
// Built by repeatedly removing a minimum-degree vertex (smallest id on
// ties) and placing it last among the unplaced vertices.
struct Ordering {
  std::vector<Vertex> order;
  // max_i (min degree of G[v_1..v_i]) + 1; 0 for the empty graph.
  std::size_t beta_value = 0;
};

inline Ordering min_degree_last_ordering(const Graph& g) {
  const std::size_t n = g.n();
  Ordering out;
  out.order.assign(n, 0);
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<char> removed(n, 0);
  for (std::size_t pos = n; pos-- > 0;) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    out.order[pos] = v;
    out.beta_value = std::max(out.beta_value, d + 1);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      queue.emplace(--degree[w], w);
    }
  }
  return out;
}

// First-fit along `order`. Every color below the maximum is used, so the
// result is already normalized.
inline Coloring greedy_color(const Graph& g, const std::vector<Vertex>& order) {
  Coloring c{std::vector<Color>(g.n(), kNoColor), 0};
  std::vector<std::size_t> seen_at;
  std::size_t stamp = 0;
  for (Vertex v : order) {
    ++stamp;
    seen_at.resize(std::max(seen_at.size(), g.degree(v) + 1), 0);
    for (Vertex w : g.neighbors(v)) {
      Color cw = c.color_of[w];
      if (cw != kNoColor && cw <= g.degree(v)) seen_at[cw] = stamp;
    }
    Color pick = 0;
    while (seen_at[pick] == stamp) ++pick;
    c.color_of[v] = pick;
    c.palette_size = std::max<std::size_t>(c.palette_size, pick + 1);
  }
  return c;
}

// Uses at most beta_value colors; optimal on (even-hole, diamond)-free graphs.
inline Coloring beta_greedy_color(const Graph& g) {
  return greedy_color(g, min_degree_last_ordering(g).order);
}

// ---------------------------------------------------------------------------
// Clique number via maximal-clique enumeration
// ---------------------------------------------------------------------------

struct CliqueEstimate {
  std::size_t omega = 0;
  // False when the enumeration budget tripped; omega is then a lower bound.
  bool exact = true;
};

namespace detail {

// Bron-Kerbosch with Tomita pivoting on dense local bitsets.
class LocalPivotBK {
 public:
  using Word = std::uint64_t;

  LocalPivotBK(std::size_t size, std::uint64_t& cliques_left, std::size_t& best)
      : words_((size + 63) / 64), rows_(size * words_, 0), cliques_left_(cliques_left), best_(best) {}

  void connect(std::size_t a, std::size_t b) {
    rows_[a * words_ + b / 64] |= Word{1} << (b % 64);
    rows_[b * words_ + a / 64] |= Word{1} << (a % 64);
  }

  // Returns false when the clique budget ran out.
  bool run(const std::vector<Word>& candidates, const std::vector<Word>& excluded, std::size_t depth) {
    return expand(candidates, excluded, depth);
  }

  std::size_t words() const { return words_; }

 private:
  const Word* row(std::size_t v) const { return rows_.data() + v * words_; }

  static bool none(const std::vector<Word>& s) {
    return std::all_of(s.begin(), s.end(), [](Word w) { return w == 0; });
  }

  bool expand(const std::vector<Word>& p, const std::vector<Word>& x, std::size_t depth) {
    if (none(p)) {
      if (none(x)) {
        if (cliques_left_ == 0) return false;
        --cliques_left_;
        best_ = std::max(best_, depth);
      }
      return true;
    }
    // Pivot maximizing |P ∩ N(u)| over u in P ∪ X.
    std::size_t pivot = 0;
    int pivot_score = -1;
    for (std::size_t w = 0; w < words_; ++w) {
      for (Word bits = p[w] | x[w]; bits; bits &= bits - 1) {
        std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        int score = 0;
        for (std::size_t k = 0; k < words_; ++k) score += std::popcount(p[k] & row(u)[k]);
        if (score > pivot_score) {
          pivot_score = score;
          pivot = u;
        }
      }
    }
    std::vector<Word> todo(words_);
    for (std::size_t k = 0; k < words_; ++k) todo[k] = p[k] & ~row(pivot)[k];
    std::vector<Word> pp = p;
    std::vector<Word> xx = x;
    std::vector<Word> np(words_), nx(words_);
    for (std::size_t w = 0; w < words_; ++w) {
      for (Word bits = todo[w]; bits; bits &= bits - 1) {
        std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        for (std::size_t k = 0; k < words_; ++k) {
          np[k] = pp[k] & row(v)[k];
          nx[k] = xx[k] & row(v)[k];
        }
        if (!expand(np, nx, depth + 1)) return false;
        pp[w] &= ~(Word{1} << (v % 64));
        xx[w] |= Word{1} << (v % 64);
      }
    }
    return true;
  }

  std::size_t words_;
  std::vector<Word> rows_;
  std::uint64_t& cliques_left_;
  std::size_t& best_;
};

}  // namespace detail

// Enumerates maximal cliques in degeneracy order (each vertex with its
// later neighbors as candidates, earlier ones excluded). C4-free graphs
// have O(n^2) maximal cliques; the enumeration is abandoned after
// budget_factor * n^2 of them and the result flagged inexact.
inline CliqueEstimate clique_number_c4free(const Graph& g, std::uint64_t budget_factor = 4) {
  const std::size_t n = g.n();
  CliqueEstimate est;
  if (n == 0) return est;
  std::uint64_t cliques_left = budget_factor * n * n + 16;
  // Removal sequence of the smallest-last ordering.
  auto ordering = min_degree_last_ordering(g);
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[ordering.order[n - 1 - i]] = i;

  std::size_t best = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = ordering.order[n - 1 - i];
    auto nbrs = g.neighbors(v);
    detail::LocalPivotBK bk(nbrs.size(), cliques_left, best);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (g.adjacent(nbrs[a], nbrs[b])) bk.connect(a, b);
      }
    }
    std::vector<detail::LocalPivotBK::Word> p(bk.words(), 0), x(bk.words(), 0);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      auto& side = rank[nbrs[a]] > rank[v] ? p : x;
      side[a / 64] |= detail::LocalPivotBK::Word{1} << (a % 64);
    }
    if (!bk.run(p, x, 1)) {
      est.omega = best;
      est.exact = false;
      return est;
    }
  }
  est.omega = best;
  return est;
}

// ---------------------------------------------------------------------------
// Peeling an atom without universal vertices
// ---------------------------------------------------------------------------

enum class ViolationPolicy { Throw, Flag };

struct LayerRecord {
  // Vertices of the layer, local to the peeled graph.
  VertexSet vertices;
  // Fresh colors spent on the layer.
  std::size_t colors = 0;
  // True for the closing independent set that takes a single color.
  bool edgeless_tail = false;
};

struct LayerViolation {
  std::size_t layer = 0;
  // A triangle inside the layer, when one exists.
  std::vector<Vertex> triangle;
  std::size_t colors = 0;
};

struct PeelOutcome {
  Coloring coloring;
  std::vector<LayerRecord> layers;
  std::optional<LayerViolation> violation;
};

namespace detail {

inline std::optional<std::array<Vertex, 3>> find_triangle(const Graph& h) {
  for (Vertex a = 0; a < h.n(); ++a) {
    for (Vertex b : h.neighbors(a)) {
      if (b <= a) continue;
      auto na = h.neighbors(a);
      auto nb = h.neighbors(b);
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia == *ib) return std::array<Vertex, 3>{a, b, *ia};
        if (*ia < *ib) {
          ++ia;
        } else {
          ++ib;
        }
      }
    }
  }
  return std::nullopt;
}

inline std::string describe(const LayerViolation& v) {
  std::string msg = "layer " + std::to_string(v.layer);
  if (!v.triangle.empty()) {
    msg += " contains triangle {" + std::to_string(v.triangle[0]) + "," + std::to_string(v.triangle[1]) +
           "," + std::to_string(v.triangle[2]) + "}";
  }
  msg += "; greedy used " + std::to_string(v.colors) + " colors";
  return msg;
}

}  // namespace detail

// Colors g layer by layer using the fixed twin partition tp:
//   - an edgeless nonempty remainder takes one fresh color and ends the loop;
//   - otherwise a layer takes the smallest remaining vertex of every
//     nonempty class, two of them when the class is a whole component of
//     the remainder with at least two vertices left;
//   - the layer is colored greedily on its smallest-last order with fresh
//     colors.
// On (even-hole, cap)-free graphs with no universal vertex and no clique
// cutset every layer is triangle-free and takes at most 3 colors, so the
// result uses at most floor(3/2 * omega) colors. A layer breaking either
// guarantee is a class violation.
inline PeelOutcome peel_color_core(const Graph& g, const TwinPartition& tp, ViolationPolicy policy) {
  const std::size_t n = g.n();
  const std::size_t r = tp.classes.size();
  PeelOutcome out;
  std::vector<Color> colors(n, kNoColor);
  std::vector<std::size_t> head(r, 0);
  auto left_in = [&](std::size_t i) { return tp.classes[i].size() - head[i]; };
  std::size_t remaining = n;
  Color base = 0;

  while (remaining > 0) {
    std::vector<char> isolated(r, 0);
    bool edgeless = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (left_in(i) == 0) continue;
      isolated[i] = 1;
      for (Vertex j : tp.quotient.neighbors(static_cast<Vertex>(i))) {
        if (left_in(j) > 0) {
          isolated[i] = 0;
          break;
        }
      }
      if (!isolated[i] || left_in(i) > 1) edgeless = false;
    }

    if (edgeless) {
      std::vector<Vertex> tail;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = head[i]; k < tp.classes[i].size(); ++k) tail.push_back(tp.classes[i][k]);
        head[i] = tp.classes[i].size();
      }
      for (Vertex v : tail) colors[v] = base;
      ++base;
      remaining = 0;
      out.layers.push_back({VertexSet(std::move(tail)), 1, true});
      break;
    }

    std::vector<Vertex> picked;
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t take = std::min<std::size_t>(left_in(i), isolated[i] ? 2 : 1);
      for (std::size_t k = 0; k < take; ++k) picked.push_back(tp.classes[i][head[i]++]);
    }
    VertexSet layer(std::move(picked));
    auto sub = induced_subgraph(g, layer);
    Coloring local = beta_greedy_color(sub.graph);
    auto triangle = detail::find_triangle(sub.graph);
    if ((triangle || local.palette_size > 3) && !out.violation) {
      LayerViolation violation{out.layers.size(), {}, local.palette_size};
      if (triangle) {
        for (Vertex t : *triangle) violation.triangle.push_back(layer[t]);
      }
      if (policy == ViolationPolicy::Throw) throw Error(ErrorKind::ClassViolation, detail::describe(violation));
      out.violation = std::move(violation);
    }
    for (std::size_t k = 0; k < layer.size(); ++k) colors[layer[k]] = base + local.color_of[k];
    base += static_cast<Color>(local.palette_size);
    remaining -= layer.size();
    out.layers.push_back({std::move(layer), local.palette_size, false});
  }

  out.coloring = normalized(std::move(colors));
  return out;
}

// Throws ClassViolation when a layer guarantee fails.
inline Coloring peel_color_core(const Graph& g, const TwinPartition& tp) {
  return peel_color_core(g, tp, ViolationPolicy::Throw).coloring;
}

// ---------------------------------------------------------------------------
// Atoms
// ---------------------------------------------------------------------------

struct AtomOutcome {
  Coloring coloring;
  UniversalStrip strip;
  // The atom minus its universal vertices, with ids back into the atom.
  InducedSubgraph core;
  PeelOutcome peel;
};

// Strips universal vertices, peels the rest with its twin partition, and
// gives each stripped vertex its own color after the core palette.
inline AtomOutcome color_atom(const Graph& atom, ViolationPolicy policy) {
  AtomOutcome out;
  out.strip = strip_universal_vertices(atom);
  out.core = induced_subgraph(atom, out.strip.remaining);
  out.peel = peel_color_core(out.core.graph, twin_partition(out.core.graph), policy);

  std::vector<Color> colors(atom.n(), kNoColor);
  for (std::size_t i = 0; i < out.core.host.size(); ++i) colors[out.core.host[i]] = out.peel.coloring.color_of[i];
  auto next = static_cast<Color>(out.peel.coloring.palette_size);
  for (Vertex u : out.strip.removed) colors[u] = next++;
  out.coloring = {std::move(colors), next};
  return out;
}

inline Coloring color_atom(const Graph& atom) { return color_atom(atom, ViolationPolicy::Throw).coloring; }

// ---------------------------------------------------------------------------
// Recombination along clique separators
// ---------------------------------------------------------------------------

namespace detail {

// Color renaming for the second part: its colors on the separator go to
// the first part's colors there, the rest fill the unused targets in
// ascending order. Target palette is max(first_palette, second_palette).
inline std::vector<Color> separator_permutation(const std::vector<Color>& first_on_sep,
                                                const std::vector<Color>& second_on_sep,
                                                std::size_t first_palette, std::size_t second_palette) {
  const std::size_t target = std::max(first_palette, second_palette);
  std::vector<Color> perm(second_palette, kNoColor);
  std::vector<char> taken(target, 0);
  for (std::size_t i = 0; i < first_on_sep.size(); ++i) {
    Color a = first_on_sep[i];
    Color b = second_on_sep[i];
    if (a >= target || b >= second_palette || taken[a] || perm[b] != kNoColor) {
      throw Error(ErrorKind::SeparatorMismatch, "separator is not colored injectively by both parts");
    }
    perm[b] = a;
    taken[a] = 1;
  }
  Color free = 0;
  for (Color& p : perm) {
    if (p != kNoColor) continue;
    while (taken[free]) ++free;
    p = free;
    taken[free] = 1;
  }
  return perm;
}

// Writes a part coloring (vertices + parallel colors) into `acc`,
// renaming it to agree with `acc` on `separator`. Vertices outside the
// separator must be uncolored in `acc`.
inline void merge_part_into(std::vector<Color>& acc, std::size_t& acc_palette, const VertexSet& part,
                            const std::vector<Color>& part_colors, std::size_t part_palette,
                            const VertexSet& separator) {
  std::vector<Color> first_on_sep, second_on_sep;
  for (Vertex s : separator) {
    auto idx = part.index_of(s);
    if (!idx || acc[s] == kNoColor) {
      throw Error(ErrorKind::SeparatorMismatch, "separator vertex " + std::to_string(s) + " not colored by both parts");
    }
    first_on_sep.push_back(acc[s]);
    second_on_sep.push_back(part_colors[*idx]);
  }
  auto perm = separator_permutation(first_on_sep, second_on_sep, acc_palette, part_palette);
  for (std::size_t i = 0; i < part.size(); ++i) {
    Vertex v = part[i];
    if (separator.contains(v)) continue;
    if (acc[v] != kNoColor) {
      throw Error(ErrorKind::SeparatorMismatch, "vertex " + std::to_string(v) + " colored by both parts outside the separator");
    }
    acc[v] = perm[part_colors[i]];
  }
  acc_palette = std::max(acc_palette, part_palette);
}

}  // namespace detail

// Union of two part colorings that share the clique `separator`. c1 is
// kept as is; c2 is renamed by an injection into {0..max(k1,k2)-1} that
// agrees with c1 on the separator.
inline Coloring merge_on_separator(const Coloring& c1, const Coloring& c2, const VertexSet& separator) {
  if (c1.size() != c2.size()) throw Error(ErrorKind::SeparatorMismatch, "colorings over different hosts");
  std::vector<Vertex> part;
  std::vector<Color> part_colors;
  for (Vertex v = 0; v < c2.size(); ++v) {
    if (c2[v] == kNoColor) continue;
    part.push_back(v);
    part_colors.push_back(c2[v]);
  }
  Coloring out = c1;
  detail::merge_part_into(out.color_of, out.palette_size, VertexSet::from_sorted(std::move(part)), part_colors,
                          c2.palette_size, separator);
  return out;
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

enum class Mode { Strict, Permissive };

struct ColorOptions {
  Mode mode = Mode::Permissive;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  // Largest input strict mode will certify with the exhaustive recognizer.
  std::size_t strict_max_vertices = 16;
};

struct PhaseTimings {
  double recognize_ms = 0;
  double decompose_ms = 0;
  double color_atoms_ms = 0;
  double merge_ms = 0;
  double omega_ms = 0;
  double total_ms = 0;
};

struct Ratio {
  std::size_t num = 0;
  std::size_t den = 1;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct ColoringReport {
  Coloring coloring;
  std::size_t colors_used = 0;
  std::size_t omega = 0;
  bool omega_exact = false;
  // floor(3/2 * omega)
  std::size_t bound = 0;
  // colors_used / omega in lowest terms; absent when omega is inexact or 0.
  std::optional<Ratio> ratio;
  std::optional<std::string> class_violation;
  std::size_t atoms = 0;
  PhaseTimings timings;
};

// Raised by strict mode for inputs the recognizer rejects.
class NotInClassError : public Error {
 public:
  explicit NotInClassError(ClassReport report)
      : Error(ErrorKind::NotInClass, describe(report)), report_(std::move(report)) {}
  const ClassReport& report() const noexcept { return report_; }

 private:
  static std::string describe(const ClassReport& r) {
    auto list = [](const std::vector<Vertex>& vs) {
      std::string s;
      for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
      return s;
    };
    if (r.even_hole) return "even hole [" + list(r.even_hole->cycle) + "]";
    if (r.cap) return "cap on hole [" + list(r.cap->hole.cycle) + "] with apex " + std::to_string(r.cap->apex);
    return "graph is not (even-hole, cap)-free";
  }
  ClassReport report_;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

class TreeColorer {
 public:
  TreeColorer(const Graph& g, const DecompositionTree& tree, ViolationPolicy policy)
      : g_(g), tree_(tree), policy_(policy) {}

  std::size_t fold(std::size_t node, std::vector<Color>& out) {
    std::vector<std::size_t> spine;
    while (!tree_.nodes[node].is_leaf()) {
      spine.push_back(node);
      node = static_cast<std::size_t>(tree_.nodes[node].right);
    }
    std::size_t palette = 0;
    color_leaf_into(node, out, palette, {});
    for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
      const auto& internal = tree_.nodes[*it];
      auto left = static_cast<std::size_t>(internal.left);
      if (tree_.nodes[left].is_leaf()) {
        color_leaf_into(left, out, palette, internal.separator);
      } else if (internal.separator.empty()) {
        palette = std::max(palette, fold(left, out));
      } else {
        std::vector<Color> scratch(g_.n(), kNoColor);
        std::size_t left_palette = fold(left, scratch);
        std::vector<Vertex> part;
        std::vector<Color> part_colors;
        for (Vertex v = 0; v < g_.n(); ++v) {
          if (scratch[v] == kNoColor) continue;
          part.push_back(v);
          part_colors.push_back(scratch[v]);
        }
        auto t0 = Clock::now();
        merge_part_into(out, palette, VertexSet::from_sorted(std::move(part)), part_colors, left_palette,
                        internal.separator);
        merge_ms += ms_since(t0);
      }
    }
    return palette;
  }

  std::optional<std::string> violation;
  double color_ms = 0;
  double merge_ms = 0;

 private:
  void color_leaf_into(std::size_t leaf, std::vector<Color>& out, std::size_t& palette, const VertexSet& separator) {
    const VertexSet& atom = tree_.nodes[leaf].atom;
    auto t0 = Clock::now();
    auto sub = induced_subgraph(g_, atom);
    auto result = color_atom(sub.graph, policy_);
    if (result.peel.violation && !violation) {
      LayerViolation v = *result.peel.violation;
      // Layer ids are local to the atom core; report host ids.
      for (Vertex& t : v.triangle) t = atom[result.core.host[t]];
      violation = "atom " + std::to_string(atom_index_) + " " + describe(v);
    }
    ++atom_index_;
    color_ms += ms_since(t0);
    t0 = Clock::now();
    merge_part_into(out, palette, atom, result.coloring.color_of, result.coloring.palette_size, separator);
    merge_ms += ms_since(t0);
  }

  const Graph& g_;
  const DecompositionTree& tree_;
  ViolationPolicy policy_;
  std::size_t atom_index_ = 0;
};

}  // namespace detail

// Decompose by clique cutsets, color every atom, recombine along the tree.
// The coloring is always proper. In permissive mode a failed layer
// guarantee is reported in class_violation instead of raised; strict mode
// first certifies membership with the exhaustive recognizer.
inline ColoringReport color(const Graph& g, const ColorOptions& options = {}) {
  using detail::Clock;
  const auto start = Clock::now();
  ColoringReport report;

  if (options.mode == Mode::Strict) {
    if (g.n() > options.strict_max_vertices) {
      throw Error(ErrorKind::TooLargeForStrict, "strict mode accepts at most " +
                                                    std::to_string(options.strict_max_vertices) + " vertices");
    }
    auto t0 = Clock::now();
    auto membership = classify_membership(g, options.oracle_budget);
    report.timings.recognize_ms = detail::ms_since(t0);
    if (!membership.search_exhausted) {
      throw Error(ErrorKind::TooLargeForStrict, "membership search exceeded the oracle budget");
    }
    if (!membership.in_class) throw NotInClassError(std::move(membership));
  }

  auto t0 = Clock::now();
  DecompositionTree tree = clique_cutset_decompose(g);
  report.timings.decompose_ms = detail::ms_since(t0);

  std::vector<Color> colors(g.n(), kNoColor);
  if (!tree.nodes.empty()) {
    auto policy = options.mode == Mode::Strict ? ViolationPolicy::Throw : ViolationPolicy::Flag;
    detail::TreeColorer colorer(g, tree, policy);
    colorer.fold(tree.root, colors);
    report.class_violation = colorer.violation;
    report.timings.color_atoms_ms = colorer.color_ms;
    report.timings.merge_ms = colorer.merge_ms;
    report.atoms = tree.leaves().size();
  }
  report.coloring = normalized(std::move(colors));
  report.colors_used = report.coloring.palette_size;

  t0 = Clock::now();
  auto omega = clique_number_c4free(g);
  report.timings.omega_ms = detail::ms_since(t0);
  report.omega = omega.omega;
  report.omega_exact = omega.exact;
  report.bound = 3 * report.omega / 2;
  if (report.omega_exact && report.omega > 0) {
    std::size_t d = std::gcd(report.colors_used, report.omega);
    report.ratio = Ratio{report.colors_used / d, report.omega / d};
  }
  report.timings.total_ms = detail::ms_since(start);
  return report;
}

}  // namespace capcolor
