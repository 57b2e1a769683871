#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dtopo/json_io.hpp"

namespace dtopo::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string trace;
  std::string expect;
  std::uint64_t budget = OracleBudget{}.max_recursive_calls;
  std::size_t max_set_size = 3;
  std::size_t n = 2;
  double radius = 1.0;
  double edge_length = 1.0;
  std::vector<double> center;
  std::string emit = "model";
  bool verbose = false;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw FormatError("cannot open \"" + path + "\"");
    buf << file.rdbuf();
  }
  return buf.str();
}

/// Graph JSON, cubical model JSON (taken as its intersection graph), or DOT.
Graph load_graph(const std::string& path, std::istream& in) {
  const std::string text = read_text(path, in);
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text.compare(start, 5, "graph") == 0) return parse_dot(text);
  auto j = parse_json(text);
  if (j.is_object() && j.contains("cubes")) return intersection_graph(model_from_json(j));
  return graph_from_json(j);
}

class Output {
 public:
  Output(const std::string& path, std::ostream& out) : path_(path), out_(out) {}
  void write(const std::string& text) {
    if (path_ == "-") {
      out_ << text;
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw FormatError("cannot write \"" + path_ + "\"");
    file << text;
  }
  void json(const nlohmann::ordered_json& j) { write(j.dump() + "\n"); }

 private:
  std::string path_;
  std::ostream& out_;
};

nlohmann::ordered_json labels_json(const std::vector<std::vector<VertexLabel>>& sets) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : sets) arr.push_back(s);
  return arr;
}

nlohmann::ordered_json edges_json(const std::vector<Edge>& edges) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [a, b] : edges) arr.push_back({a, b});
  return arr;
}

int cmd_check(const Options& o, std::istream& in, Output& out) {
  Graph g = load_graph(o.input, in);
  auto result = shared_oracle().is_contractible(g, OracleBudget{o.budget});
  nlohmann::ordered_json j;
  switch (result.verdict) {
    case Verdict::kTrue:
      j["contractible"] = true;
      j["certificate"] = certificate_to_json(*result.certificate);
      out.json(j);
      return kOk;
    case Verdict::kFalse:
      j["contractible"] = false;
      out.json(j);
      return kNegative;
    case Verdict::kUndecided:
      j["contractible"] = nullptr;
      j["undecided"] = true;
      out.json(j);
      return kUndecided;
  }
  return kUndecided;
}

int cmd_simple(const Options& o, std::istream& in, Output& out) {
  Graph g = load_graph(o.input, in);
  Oracle& oracle = shared_oracle();
  OracleBudget budget{o.budget};
  auto points = oracle.enumerate_simple_points(g, budget);
  auto edges = oracle.enumerate_simple_edges(g, budget);
  SimpleSets sets;
  if (g.order() >= 2)
    sets = oracle.enumerate_simple_sets(g, 2, std::min(o.max_set_size, g.order()), budget);
  nlohmann::ordered_json j;
  j["simple_points"] = points.points;
  j["simple_edges"] = edges_json(edges.edges);
  j["simple_sets"] = labels_json(sets.sets);
  nlohmann::ordered_json undecided;
  undecided["points"] = points.undecided;
  undecided["edges"] = edges_json(edges.undecided);
  undecided["sets"] = labels_json(sets.undecided);
  j["undecided"] = std::move(undecided);
  out.json(j);
  bool any = !points.undecided.empty() || !edges.undecided.empty() || !sets.undecided.empty();
  return any ? kUndecided : kOk;
}

int cmd_thin(const Options& o, std::istream& in, Output& out, std::ostream& err) {
  Graph g = load_graph(o.input, in);
  ThinningConfig cfg{o.max_set_size, OracleBudget{o.budget}};
  auto t0 = std::chrono::steady_clock::now();
  auto report = thin(g, cfg);
  if (o.verbose) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    err << "thin: " << g.order() << " -> " << report.skeleton.order() << " vertices in " << ms.count()
        << " ms\n";
  }
  out.json(report_to_json(report));
  return report.stats.undecided_candidates_skipped > 0 ? kUndecided : kOk;
}

int cmd_invariants(const Options& o, std::istream& in, Output& out) {
  out.json(invariants_to_json(summarize(load_graph(o.input, in))));
  return kOk;
}

int cmd_cubify(const Options& o, Output& out, std::ostream& err) {
  if (o.n != 2 && o.n != 3) throw FormatError("--n must be 2 or 3 for cubify");
  std::vector<double> center = o.center.empty() ? std::vector<double>(o.n, 0.0) : o.center;
  if (center.size() != o.n) throw FormatError("--center must have --n coordinates");
  auto surface = ImplicitSurface::sphere(center, o.radius);
  auto vox = voxelize(surface, surface.bounds(2.0 * o.edge_length), o.edge_length);
  for (const auto& w : vox.warnings) err << "warning: " << w << "\n";
  if (o.emit == "graph")
    out.json(graph_to_json(intersection_graph(vox.model)));
  else
    out.json(model_to_json(vox.model));
  return kOk;
}

int cmd_verify_trace(const Options& o, std::istream& in, Output& out) {
  if (o.trace.empty()) throw FormatError("verify-trace needs --trace");
  Graph g = load_graph(o.input, in);
  auto doc = parse_json(read_text(o.trace, in));
  // A thinning report carries its own expected endpoint.
  std::optional<Graph> expected;
  Trace trace;
  if (doc.is_object() && doc.contains("trace")) {
    trace = trace_from_json(doc.at("trace"));
    if (doc.contains("skeleton")) expected = graph_from_json(doc.at("skeleton"));
  } else {
    trace = trace_from_json(doc);
  }
  if (!o.expect.empty()) expected = load_graph(o.expect, in);

  nlohmann::ordered_json j;
  try {
    Graph final_graph = replay(trace, g, OracleBudget{o.budget});
    const std::string final_digest = digest(final_graph);
    j["valid"] = true;
    j["steps"] = trace.steps.size();
    j["final_digest"] = final_digest;
    if (expected) {
      bool match = digest(*expected) == final_digest;
      j["endpoint_matches"] = match;
      if (!match) j["valid"] = false;
    }
  } catch (const ReplayError& e) {
    j["valid"] = false;
    j["error"] = e.what();
    if (e.step()) j["step"] = *e.step();
  }
  out.json(j);
  return j["valid"].get<bool>() ? kOk : kNegative;
}

int cmd_export_dot(const Options& o, std::istream& in, Output& out) {
  out.write(to_dot(load_graph(o.input, in)));
  return kOk;
}

int cmd_sphere(const Options& o, Output& out) {
  out.json(graph_to_json(minimal_digital_sphere(o.n)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digital-topology toolkit: contractibility, simple points and sets, thinning"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Graph JSON, cubical model JSON or DOT; - for stdin");
    sub->add_option("--output,-o", o.output, "Output path; - for stdout");
    sub->add_flag("--verbose,-v", o.verbose, "Diagnostics on stderr");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Max recursive oracle calls per query")->check(CLI::PositiveNumber);
  };
  auto add_set_size = [&](CLI::App* sub) {
    sub->add_option("--max-set-size", o.max_set_size, "Largest simple set searched")->check(CLI::Range(2, 64));
  };

  auto* check = app.add_subcommand("check", "Decide contractibility and print a certificate");
  add_io(check);
  add_budget(check);
  auto* simple = app.add_subcommand("simple", "List simple points, edges and sets");
  add_io(simple);
  add_budget(simple);
  add_set_size(simple);
  auto* thin_cmd = app.add_subcommand("thin", "Thin to a skeleton with a replayable trace");
  add_io(thin_cmd);
  add_budget(thin_cmd);
  add_set_size(thin_cmd);
  auto* inv = app.add_subcommand("invariants", "Euler characteristic, GF(2) Betti numbers, clique counts");
  add_io(inv);
  auto* cubify = app.add_subcommand("cubify", "Voxelize a circle or sphere centred at --center");
  cubify->add_option("--output,-o", o.output, "Output path; - for stdout");
  cubify->add_option("--n", o.n, "Dimension (2 or 3)");
  cubify->add_option("--radius", o.radius, "Radius")->check(CLI::NonNegativeNumber);
  cubify->add_option("--edge-length", o.edge_length, "Cube edge length L")->check(CLI::PositiveNumber);
  cubify->add_option("--center", o.center, "Centre coordinates")->delimiter(',');
  cubify->add_option("--emit", o.emit, "model or graph")->check(CLI::IsMember({"model", "graph"}));
  auto* verify = app.add_subcommand("verify-trace", "Replay a trace with full precondition checks");
  add_io(verify);
  add_budget(verify);
  verify->add_option("--trace", o.trace, "Trace JSON or thinning report JSON")->required();
  verify->add_option("--expect", o.expect, "Expected final graph");
  auto* dot = app.add_subcommand("export-dot", "Write the graph as DOT");
  add_io(dot);
  auto* sphere = app.add_subcommand("sphere", "Minimal digital n-sphere");
  sphere->add_option("--output,-o", o.output, "Output path; - for stdout");
  sphere->add_option("--n", o.n, "Dimension")->required();

  std::vector<std::string> storage{"dtopo"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    Output output(o.output, out);
    if (*check) return cmd_check(o, in, output);
    if (*simple) return cmd_simple(o, in, output);
    if (*thin_cmd) return cmd_thin(o, in, output, err);
    if (*inv) return cmd_invariants(o, in, output);
    if (*cubify) return cmd_cubify(o, output, err);
    if (*verify) return cmd_verify_trace(o, in, output);
    if (*dot) return cmd_export_dot(o, in, output);
    if (*sphere) return cmd_sphere(o, output);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace dtopo::cli
