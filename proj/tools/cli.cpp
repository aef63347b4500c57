#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphroots/cliques.hpp"
#include "graphroots/error.hpp"
#include "graphroots/io.hpp"
#include "graphroots/oracle.hpp"
#include "graphroots/reduction.hpp"
#include "graphroots/root6.hpp"
#include "graphroots/root7.hpp"

namespace graphroots::cli {
namespace {

using nlohmann::json;

// Carries a file name into ParseError diagnostics.
struct FileParseError {
  std::string path;
  ParseError error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) {
  const std::string text = slurp(path);
  try {
    return parse_edge_list(text);
  } catch (const ParseError& e) {
    throw FileParseError{path, e};
  }
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

SetSplittingInstance load_instance(const std::string& path) {
  const std::string text = slurp(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // The reported byte is one past the offending character.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw FileParseError{path, ParseError(line, column, "malformed JSON")};
  }
  SetSplittingInstance ss;
  try {
    ss.ground_size = doc.at("n").get<int>();
    ss.subsets = doc.at("subsets").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw FileParseError{path, ParseError(1, 1, std::string("bad instance: ") + e.what())};
  }
  return ss;
}

json girth_json(Girth g) {
  if (g.is_infinite()) return "inf";
  return g.length();
}

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph root {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw UsageError(what + ": expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

struct Common {
  std::string file;
  bool as_json = false;
  bool dot = false;
};

int report_root(const RootResult& r, const Common& c, std::ostream& out) {
  if (c.as_json) {
    json doc;
    doc["verdict"] = to_string(r.verdict);
    doc["reason"] = r.reason ? json(to_string(*r.reason)) : json(nullptr);
    doc["root_edges"] = r.root ? edges_json(*r.root) : json(nullptr);
    doc["girth"] = r.root_girth ? girth_json(*r.root_girth) : json(nullptr);
    doc["n"] = r.root ? json(r.root->num_vertices()) : json(nullptr);
    out << doc.dump() << "\n";
  } else if (r.yes()) {
    out << (c.dot ? to_dot(*r.root) : to_edge_list(*r.root));
  } else {
    out << "NO " << to_string(*r.reason) << "\n";
  }
  return r.yes() ? kYes : kNo;
}

void add_common(CLI::App* sub, Common& c, bool roots) {
  sub->add_option("file", c.file, "edge-list file")->required();
  sub->add_flag("--json", c.as_json, "structured output");
  if (roots) sub->add_flag("--dot", c.dot, "print the root in DOT format");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square roots of graphs under girth constraints", "graphroots"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common c;
  int k = 2;
  std::optional<std::size_t> cap;
  std::string weights_file;
  bool bipartite = false;
  std::string edge_text;
  int vertex = -1;
  std::string set_text;
  std::optional<int> girth_min;
  std::optional<int> girth_exact;
  std::string forbid_text;
  std::size_t limit = 1;
  std::uint64_t budget = 50'000'000;
  bool no_pruning = false;
  std::string root_file;
  std::string roles_file;

  auto* square_cmd = app.add_subcommand("square", "print the square of a graph");
  add_common(square_cmd, c, false);
  auto* power_cmd = app.add_subcommand("power", "print the k-th power of a graph");
  add_common(power_cmd, c, false);
  power_cmd->add_option("--k", k, "exponent (>= 1)")->required();
  auto* girth_cmd = app.add_subcommand("girth", "print the girth (or 'inf')");
  add_common(girth_cmd, c, false);
  auto* cliques_cmd = app.add_subcommand("cliques", "list maximal cliques");
  add_common(cliques_cmd, c, false);
  cliques_cmd->add_option("--cap", cap, "stop past this many cliques");
  auto* max_cmd = app.add_subcommand("clique-max", "heaviest maximal clique");
  add_common(max_cmd, c, false);
  max_cmd->add_option("--weights", weights_file, "file of 'v w' lines (default weight 1)");
  max_cmd->add_option("--cap", cap, "clique cap (default n)");
  auto* root7_cmd = app.add_subcommand("root7", "girth >= 7 square root");
  add_common(root7_cmd, c, true);
  root7_cmd->add_flag("--bipartite-c4c6", bipartite, "bipartite root without C4 and C6");
  auto* root6_cmd = app.add_subcommand("root6", "girth >= 6 square root");
  add_common(root6_cmd, c, true);
  auto* fixed_cmd = app.add_subcommand("root6-fixed", "girth >= 6 root through a given edge");
  add_common(fixed_cmd, c, true);
  fixed_cmd->add_option("--edge", edge_text, "u,v")->required();
  auto* nbhd_cmd = app.add_subcommand("root6-nbhd", "{C3,C5}-free root with N_H(v) fixed");
  add_common(nbhd_cmd, c, true);
  nbhd_cmd->add_option("--vertex", vertex, "v")->required();
  nbhd_cmd->add_option("--set", set_text, "a,b,c")->required();
  auto* oracle_cmd = app.add_subcommand("root-oracle", "exhaustive root search");
  add_common(oracle_cmd, c, false);
  auto* gmin = oracle_cmd->add_option("--girth-min", girth_min, "root girth lower bound");
  auto* gexact = oracle_cmd->add_option("--girth-exact", girth_exact, "exact root girth");
  oracle_cmd->add_option("--forbid", forbid_text, "forbidden cycle lengths, e.g. 3,5");
  gmin->excludes(gexact);
  oracle_cmd->add_option("--limit", limit, "maximum number of roots")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--budget", budget, "search node cap");
  oracle_cmd->add_flag("--no-pruning", no_pruning, "constraint checks only");
  auto* build_cmd = app.add_subcommand("reduce-build", "reduction graph of a set splitting instance");
  build_cmd->add_option("instance", c.file, "instance JSON")->required();
  build_cmd->add_flag("--json", c.as_json, "graph and roles as JSON");
  build_cmd->add_option("--roles", roles_file, "write the role map JSON here");
  auto* extract_cmd = app.add_subcommand("reduce-extract", "set splitting from a square root");
  extract_cmd->add_option("instance", c.file, "instance JSON")->required();
  extract_cmd->add_option("root", root_file, "root edge-list file")->required();
  extract_cmd->add_flag("--json", c.as_json, "structured output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*square_cmd || *power_cmd) {
      const Graph g = load_graph(c.file);
      const Graph p = power(g, *square_cmd ? 2 : k);
      if (c.as_json) {
        out << json{{"n", p.num_vertices()}, {"edges", edges_json(p)}}.dump() << "\n";
      } else {
        out << to_edge_list(p);
      }
      return kYes;
    }
    if (*girth_cmd) {
      const Girth g = girth(load_graph(c.file));
      if (c.as_json) {
        out << json{{"girth", girth_json(g)}}.dump() << "\n";
      } else {
        out << g.to_string() << "\n";
      }
      return kYes;
    }
    if (*cliques_cmd) {
      const CliqueList list = enumerate_maximal_cliques(load_graph(c.file), cap);
      if (c.as_json) {
        out << json{{"complete", list.complete}, {"cliques", list.cliques}}.dump() << "\n";
      } else {
        for (const VertexSet& q : list.cliques) {
          for (std::size_t i = 0; i < q.size(); ++i) out << (i ? " " : "") << q[i];
          out << "\n";
        }
        if (!list.complete) err << "clique cap exceeded; list is partial\n";
      }
      return list.complete ? kYes : kNo;
    }
    if (*max_cmd) {
      const Graph g = load_graph(c.file);
      std::vector<double> w(g.num_vertices(), 1.0);
      if (!weights_file.empty()) {
        const std::string text = slurp(weights_file);
        try {
          w = parse_weights(text, g.num_vertices());
        } catch (const ParseError& e) {
          throw FileParseError{weights_file, e};
        }
      }
      try {
        const WeightedClique best =
            max_weight_clique(g, w, cap.value_or(static_cast<std::size_t>(g.num_vertices())));
        if (c.as_json) {
          out << json{{"clique", best.vertices}, {"weight", best.weight}}.dump() << "\n";
        } else {
          for (std::size_t i = 0; i < best.vertices.size(); ++i) {
            out << (i ? " " : "") << best.vertices[i];
          }
          out << "\n" << best.weight << "\n";
        }
        return kYes;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kCapExceeded) throw;
        if (c.as_json) out << json{{"error", "CAP_EXCEEDED"}, {"message", e.what()}}.dump() << "\n";
        err << e.what() << "\n";
        return kNo;
      }
    }
    if (*root7_cmd) {
      const Graph g = load_graph(c.file);
      return report_root(bipartite ? recognize_bipartite_c4c6free(g) : recognize_root7(g), c, out);
    }
    if (*root6_cmd) return report_root(recognize_girth6(load_graph(c.file)), c, out);
    if (*fixed_cmd) {
      const auto xy = parse_int_list(edge_text, "--edge");
      if (xy.size() != 2) throw UsageError("--edge: expected u,v");
      return report_root(root_with_edge(load_graph(c.file), xy[0], xy[1]), c, out);
    }
    if (*nbhd_cmd) {
      auto u_set = parse_int_list(set_text, "--set");
      std::sort(u_set.begin(), u_set.end());
      const Graph g = load_graph(c.file);
      const PropagationResult r = root_with_neighborhood(g, vertex, u_set);
      RootResult result = r.root ? RootResult::accept(*r.root)
                                 : RootResult::reject(Reason::kNoCandidate);
      return report_root(result, c, out);
    }
    if (*oracle_cmd) {
      RootQuery q;
      q.g = load_graph(c.file);
      q.girth_min = girth_min;
      q.girth_exact = girth_exact;
      if (!forbid_text.empty()) q.forbidden_cycles = parse_int_list(forbid_text, "--forbid");
      q.limit = limit;
      q.budget = budget;
      q.pruning = !no_pruning;
      const RootSearch s = find_roots(q);
      if (c.as_json) {
        json roots = json::array();
        for (const Graph& h : s.roots) {
          roots.push_back({{"edges", edges_json(h)}, {"girth", girth_json(girth(h))}});
        }
        out << json{{"status", to_string(s.status)},
                    {"exhausted", s.exhausted},
                    {"nodes", s.nodes},
                    {"roots", roots}}
                   .dump()
            << "\n";
      } else {
        for (std::size_t i = 0; i < s.roots.size(); ++i) {
          out << "# root " << i + 1 << " girth " << girth(s.roots[i]).to_string() << "\n"
              << to_edge_list(s.roots[i]);
        }
        err << to_string(s.status) << " after " << s.nodes << " nodes, " << s.roots.size()
            << " root(s)\n";
      }
      if (s.status == SearchStatus::kBudgetExceeded) return kBudget;
      return s.roots.empty() ? kNo : kYes;
    }
    if (*build_cmd) {
      const ReductionInstance ri = build_instance(load_instance(c.file));
      json roles = json::array();
      for (Vertex v = 0; v < ri.graph.num_vertices(); ++v) {
        roles.push_back({{"vertex", v}, {"role", role_name(ri.roles[v])}});
      }
      if (!roles_file.empty()) {
        std::ofstream rf(roles_file);
        if (!rf) throw UsageError("cannot write " + roles_file);
        rf << roles.dump(2) << "\n";
      }
      if (c.as_json) {
        out << json{{"n", ri.graph.num_vertices()}, {"edges", edges_json(ri.graph)}, {"roles", roles}}
                   .dump()
            << "\n";
      } else {
        out << to_edge_list(ri.graph);
      }
      return kYes;
    }
    if (*extract_cmd) {
      const ReductionInstance ri = build_instance(load_instance(c.file));
      const Graph h = load_graph(root_file);
      try {
        const Extraction ex = extract_partition(ri, h);
        if (c.as_json) {
          out << json{{"block1", ex.partition.block1},
                      {"block2", ex.partition.block2},
                      {"strategy", to_string(ex.strategy)}}
                     .dump()
              << "\n";
        } else {
          auto line = [&](const std::vector<int>& b) {
            for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
            out << "\n";
          };
          line(ex.partition.block1);
          line(ex.partition.block2);
        }
        return kYes;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotARoot && e.code() != ErrorCode::kNoValidSplitting) throw;
        if (c.as_json) out << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << "\n";
        err << to_string(e.code()) << ": " << e.what() << "\n";
        return kNo;
      }
    }
  } catch (const FileParseError& e) {
    err << e.path << ":" << e.error.line() << ":" << e.error.column() << ": "
        << e.error.detail() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace graphroots::cli
