#pragma once

// JSON views of library results, used by the command-line tool. Key names
// are part of the tool's output contract.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "capcolor/coloring.hpp"
#include "capcolor/decomposition.hpp"
#include "capcolor/error.hpp"
#include "capcolor/oracles.hpp"

namespace capcolor {

using Json = nlohmann::json;

inline Json to_json(const ColoringReport& r) {
  Json j;
  j["colors_used"] = r.colors_used;
  j["omega"] = r.omega;
  j["omega_exact"] = r.omega_exact;
  j["bound"] = r.bound;
  j["ratio"] = r.ratio ? Json(std::to_string(r.ratio->num) + "/" + std::to_string(r.ratio->den)) : Json(nullptr);
  j["class_violation"] = r.class_violation ? Json(*r.class_violation) : Json(nullptr);
  j["atoms"] = r.atoms;
  j["timings_ms"] = {{"recognize", r.timings.recognize_ms}, {"decompose", r.timings.decompose_ms},
                     {"color_atoms", r.timings.color_atoms_ms}, {"merge", r.timings.merge_ms},
                     {"omega", r.timings.omega_ms},         {"total", r.timings.total_ms}};
  j["coloring"] = r.coloring.color_of;
  return j;
}

// Coloring file: {"colors":[c_0,...,c_{n-1}],"k":K}
inline Json coloring_file_json(const Coloring& c) {
  return Json{{"colors", c.color_of}, {"k", c.palette_size}};
}

// Accepts a coloring file or a full report (its "coloring" array). The
// palette size is recomputed from the colors.
inline Coloring read_coloring_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("coloring JSON: ") + e.what());
  }
  const Json* colors = nullptr;
  if (j.is_object() && j.contains("colors")) {
    colors = &j["colors"];
  } else if (j.is_object() && j.contains("coloring")) {
    colors = &j["coloring"];
  }
  if (!colors || !colors->is_array()) {
    throw Error(ErrorKind::ParseError, "coloring JSON needs a \"colors\" array");
  }
  Coloring c;
  for (const auto& value : *colors) {
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() >= kNoColor) {
      throw Error(ErrorKind::ParseError, "colors must be nonnegative integers");
    }
    auto color = value.get<Color>();
    c.color_of.push_back(color);
    c.palette_size = std::max<std::size_t>(c.palette_size, std::size_t{color} + 1);
  }
  return c;
}

// Vertex lists in JSON use the 1-based ids of the DIMACS input.
inline Json dimacs_ids(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(std::uint64_t{v} + 1);
  return out;
}

inline Json to_json(const ClassReport& r) {
  Json j;
  j["in_class"] = r.in_class;
  j["search_exhausted"] = r.search_exhausted;
  j["even_hole"] = r.even_hole ? dimacs_ids(r.even_hole->cycle) : Json(nullptr);
  if (r.cap) {
    j["cap"] = {{"hole", dimacs_ids(r.cap->hole.cycle)}, {"apex", std::uint64_t{r.cap->apex} + 1}};
  } else {
    j["cap"] = nullptr;
  }
  return j;
}

// Flat node list; "left"/"right" refer to node ids.
inline Json to_json(const DecompositionTree& tree) {
  Json j;
  j["root"] = tree.nodes.empty() ? Json(nullptr) : Json(tree.root);
  j["nodes"] = Json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    if (node.is_leaf()) {
      j["nodes"].push_back({{"id", i}, {"type", "atom"}, {"vertices", dimacs_ids(node.atom.members())}});
    } else {
      j["nodes"].push_back({{"id", i},
                            {"type", "split"},
                            {"separator", dimacs_ids(node.separator.members())},
                            {"left", node.left},
                            {"right", node.right}});
    }
  }
  return j;
}

// Indented dump. A right child is printed at its parent's depth so that
// long separator chains stay flat.
inline std::string to_text(const DecompositionTree& tree) {
  if (tree.nodes.empty()) return "(empty graph)\n";
  auto list = [](const VertexSet& s) {
    std::string t = "{";
    for (std::size_t i = 0; i < s.size(); ++i) t += (i ? " " : "") + std::to_string(s[i] + 1);
    return t + "}";
  };
  std::string out;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{tree.root, 0}};
  while (!stack.empty()) {
    auto [index, depth] = stack.back();
    stack.pop_back();
    const auto& node = tree.nodes[index];
    out.append(2 * depth, ' ');
    if (node.is_leaf()) {
      out += "atom " + list(node.atom) + "\n";
    } else {
      out += "split " + list(node.separator) + "\n";
      stack.push_back({static_cast<std::size_t>(node.right), depth});
      stack.push_back({static_cast<std::size_t>(node.left), depth + 1});
    }
  }
  return out;
}

}  // namespace capcolor
