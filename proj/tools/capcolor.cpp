// capcolor: color, verify, recognize, decompose, gen, stats.
//
// Exit codes: 0 ok, 1 negative verdict, 2 usage, 3 input parse error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "capcolor/capcolor.hpp"
#include "capcolor/json_io.hpp"

namespace {

using namespace capcolor;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kParse = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string output;
  std::vector<std::string> positional;
  std::string mode = "permissive";
  std::uint64_t budget = kDefaultOracleBudget;
  std::uint64_t seed = 0;
  bool json = false;
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Whole output in one write; files go through a temp file and rename.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  auto tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
    if (!out.flush()) throw UsageError("cannot write " + path);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw UsageError("cannot write " + path);
  }
}

// -i wins; otherwise the first positional; otherwise stdin.
std::string input_path(const RunConfig& cfg) {
  if (!cfg.input.empty()) return cfg.input;
  if (!cfg.positional.empty()) return cfg.positional.front();
  return "-";
}

Graph load_graph(const RunConfig& cfg) { return parse_dimacs(read_all(input_path(cfg))); }

std::string ids(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

std::string witness_text(const ClassReport& r) {
  if (r.even_hole) return "even hole: " + ids(r.even_hole->cycle) + "\n";
  if (r.cap) return "cap: hole " + ids(r.cap->hole.cycle) + " apex " + std::to_string(r.cap->apex + 1) + "\n";
  if (!r.search_exhausted) return "undecided: search budget exhausted\n";
  return "in class\n";
}

int run_color(const RunConfig& cfg) {
  ColorOptions options;
  if (cfg.mode == "strict") {
    options.mode = Mode::Strict;
  } else if (cfg.mode != "permissive") {
    throw UsageError("--mode must be strict or permissive");
  }
  options.oracle_budget = cfg.budget;
  Graph g = load_graph(cfg);
  try {
    auto report = color(g, options);
    emit(cfg.output, (cfg.json ? to_json(report) : coloring_file_json(report.coloring)).dump() + "\n");
    if (report.class_violation) std::cerr << "warning: class violation: " << *report.class_violation << "\n";
    return kOk;
  } catch (const NotInClassError& e) {
    std::cerr << "not (even-hole, cap)-free; " << witness_text(e.report());
    if (cfg.json) emit(cfg.output, Json{{"error", "NotInClass"}, {"witness", to_json(e.report())}}.dump() + "\n");
    return kNegative;
  }
}

int run_verify(const RunConfig& cfg, const std::string& coloring_flag) {
  std::string graph_path = input_path(cfg);
  std::string coloring_path = coloring_flag;
  if (coloring_path.empty()) {
    std::size_t skip = cfg.input.empty() ? 1 : 0;
    if (cfg.positional.size() <= skip) throw UsageError("verify needs a coloring file");
    coloring_path = cfg.positional[skip];
  }
  if (graph_path == "-" && coloring_path == "-") throw UsageError("graph and coloring cannot both be stdin");
  Graph g = parse_dimacs(read_all(graph_path));
  Coloring c = read_coloring_json(read_all(coloring_path));

  Json verdict{{"proper", false}, {"n", g.n()}, {"k", c.palette_size}};
  std::string message;
  if (c.size() != g.n()) {
    message = "coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(g.n()) + " vertices";
    verdict["reason"] = message;
  } else {
    for (const auto& [u, v] : g.edges()) {
      if (c[u] == c[v]) {
        message = "edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) + " is monochromatic";
        verdict["reason"] = message;
        verdict["conflict"] = dimacs_ids({u, v});
        break;
      }
    }
    if (message.empty()) verdict["proper"] = true;
  }
  bool ok = verdict["proper"].get<bool>();
  if (cfg.json) {
    emit(cfg.output, verdict.dump() + "\n");
  } else {
    emit(cfg.output, ok ? "proper " + std::to_string(c.palette_size) + "-coloring\n" : "improper: " + message + "\n");
  }
  return ok ? kOk : kNegative;
}

int run_recognize(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  auto report = classify_membership(g, cfg.budget);
  emit(cfg.output, cfg.json ? to_json(report).dump() + "\n" : witness_text(report));
  return report.in_class ? kOk : kNegative;
}

int run_decompose(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  auto tree = clique_cutset_decompose(g);
  emit(cfg.output, cfg.json ? to_json(tree).dump() + "\n" : to_text(tree));
  return kOk;
}

int run_gen(const RunConfig& cfg, const std::string& family_name, gen::GenSpec spec) {
  auto family = gen::parse_family(family_name);
  if (!family) throw UsageError("unknown family " + family_name);
  spec.family = *family;
  spec.seed = cfg.seed;
  auto g = gen::generate(spec);
  if (!g) {
    std::cerr << "no in-class graph found in " << spec.tries << " tries\n";
    return kNegative;
  }
  emit(cfg.output, write_dimacs(*g));
  return kOk;
}

int run_stats(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  auto tp = twin_partition(g);
  auto tree = clique_cutset_decompose(g);
  auto omega = clique_number_c4free(g);
  Json j{{"n", g.n()},
         {"m", g.m()},
         {"components", connected_components(g).count()},
         {"twin_classes", tp.classes.size()},
         {"atoms", tree.leaves().size()},
         {"beta", min_degree_last_ordering(g).beta_value},
         {"omega", omega.omega},
         {"omega_exact", omega.exact}};
  if (cfg.json) {
    emit(cfg.output, j.dump() + "\n");
  } else {
    std::string text;
    for (auto& [key, value] : j.items()) text += key + " " + value.dump() + "\n";
    emit(cfg.output, text);
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidEdge:
    case ErrorKind::DuplicateEdge:
    case ErrorKind::InvalidVertex:
    case ErrorKind::CountMismatch:
      return kParse;
    case ErrorKind::InvalidParameter:
    case ErrorKind::TooLarge:
    case ErrorKind::TooLargeForStrict:
      return kUsage;
    default:
      return kNegative;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloring (even-hole, cap)-free graphs with at most floor(3/2 omega) colors"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string coloring_flag;
  std::string family;
  gen::GenSpec spec;
  std::size_t n = 0, k = 0;

  auto common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) {
      sub->add_option("-i,--input", cfg.input, "DIMACS graph (default stdin)");
      sub->add_option("files", cfg.positional, "input files");
    }
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--mode", cfg.mode, "strict|permissive")->check(CLI::IsMember({"strict", "permissive"}));
    sub->add_option("--budget", cfg.budget, "oracle node-expansion budget");
    sub->add_option("--seed", cfg.seed, "random seed");
    return sub;
  };

  auto* color_cmd = common(app.add_subcommand("color", "color a graph"), true);
  auto* verify_cmd = common(app.add_subcommand("verify", "check a coloring: verify GRAPH COLORING"), true);
  verify_cmd->add_option("-c,--coloring", coloring_flag, "coloring JSON file");
  auto* recognize_cmd = common(app.add_subcommand("recognize", "decide (even-hole, cap)-freeness"), true);
  recognize_cmd->add_flag("--expect-in-class", "exit 1 unless the graph is in class (the default verdict)");
  auto* decompose_cmd = common(app.add_subcommand("decompose", "clique-cutset decomposition tree"), true);
  auto* stats_cmd = common(app.add_subcommand("stats", "graph statistics"), true);
  auto* gen_cmd = common(app.add_subcommand("gen", "generate a graph in DIMACS format"), false);
  gen_cmd->add_option("family", family, "cycle|complete|hajos|gk|blowup|random_chordal|random_in_class")
      ->required();
  auto* n_opt = gen_cmd->add_option("--n", n, "vertex count / cycle length");
  auto* k_opt = gen_cmd->add_option("--k", k, "blow-up factor / max attachment size");
  gen_cmd->add_option("--p", spec.p, "edge probability");
  gen_cmd->add_option("--tries", spec.tries, "rejection-sampling attempts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*color_cmd) return run_color(cfg);
    if (*verify_cmd) return run_verify(cfg, coloring_flag);
    if (*recognize_cmd) return run_recognize(cfg);
    if (*decompose_cmd) return run_decompose(cfg);
    if (*stats_cmd) return run_stats(cfg);
    if (*gen_cmd) {
      if (*n_opt) spec.n = n;
      if (*k_opt) spec.k = k;
      return run_gen(cfg, family, spec);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}
