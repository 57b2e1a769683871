#include "dtopo/transforms.hpp"

#include <algorithm>
#include <sstream>

#include "dtopo/graph_io.hpp"

namespace dtopo {

namespace {

using Reason = TransformError::Reason;

std::string list(std::span<const VertexLabel> labels) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << '}';
  return os.str();
}

std::string list(const Graph& g, const VertexSet& s) {
  std::vector<VertexLabel> labels;
  s.for_each([&](std::size_t i) { labels.push_back(g.label(i)); });
  return list(labels);
}

std::size_t require_vertex(const Graph& g, std::string_view v) {
  auto i = g.find(v);
  if (!i) throw TransformError(Reason::kUnknownLabel, "unknown vertex \"" + std::string(v) + "\"");
  return *i;
}

void require_fresh(const Graph& g, const VertexLabel& label) {
  if (label.empty()) throw TransformError(Reason::kLabelCollision, "new vertex label is empty");
  if (g.contains(label))
    throw TransformError(Reason::kLabelCollision, "label \"" + label + "\" is already a vertex");
}

VertexSet require_set(const Graph& g, std::span<const VertexLabel> labels) {
  VertexSet s(g.order());
  for (const auto& l : labels) s.insert(require_vertex(g, l));
  return s;
}

std::vector<VertexLabel> sorted_unique(std::span<const VertexLabel> labels) {
  std::vector<VertexLabel> out(labels.begin(), labels.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_decided(Verdict v, Reason reason, const std::string& what) {
  if (v == Verdict::kUndecided)
    throw TransformError(Reason::kUndecided, what + " (undecided: oracle budget exhausted)");
  if (v == Verdict::kFalse) throw TransformError(reason, what);
}

// Structural contraction; no precondition checks.
Graph contract_unchecked(const Graph& g, const VertexSet& s, const VertexLabel& z) {
  VertexSet outside = external_neighborhood(g, s);
  std::vector<VertexLabel> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (!s.contains(i)) labels.push_back(g.label(i));
  labels.push_back(z);
  for (const auto& [a, b] : g.edges())
    if (!s.contains(g.index(a)) && !s.contains(g.index(b))) edges.emplace_back(a, b);
  outside.for_each([&](std::size_t i) { edges.emplace_back(z, g.label(i)); });
  return Graph(std::move(labels), edges);
}

void check_contractible_set(const Graph& g, const VertexSet& s, const std::vector<VertexLabel>& labels,
                            OracleBudget budget, Oracle& oracle) {
  if (s.empty()) throw TransformError(Reason::kEmptySet, "cannot contract an empty set");
  SimpleSetCheck check = oracle.check_simple_set(g, s, budget);
  require_decided(check.set_contractible, Reason::kSetNotContractible,
                  "set " + list(labels) + " does not induce a contractible subgraph");
  require_decided(check.union_contractible, Reason::kNeighborhoodNotContractible,
                  "neighbourhood union " + list(g, ball_union(g, s)) + " of " + list(labels) +
                      " is not contractible");
}

}  // namespace

std::string_view kind_name(const Transformation& t) {
  struct Visitor {
    std::string_view operator()(const DeletePoint&) const { return "delete_point"; }
    std::string_view operator()(const GluePoint&) const { return "glue_point"; }
    std::string_view operator()(const DeleteEdge&) const { return "delete_edge"; }
    std::string_view operator()(const GlueEdge&) const { return "glue_edge"; }
    std::string_view operator()(const ContractSet&) const { return "contract_set"; }
  };
  return std::visit(Visitor{}, t);
}

VertexLabel fresh_label(const Graph& g, const std::set<VertexLabel>& avoid) {
  for (std::size_t k = 0;; ++k) {
    VertexLabel candidate = "z" + std::to_string(k);
    if (!g.contains(candidate) && !avoid.contains(candidate)) return candidate;
  }
}

Graph delete_simple_point(const Graph& g, std::string_view v, OracleBudget budget, Oracle& oracle) {
  std::size_t i = require_vertex(g, v);
  require_decided(oracle.is_simple_point(g, i, budget), Reason::kNotSimple,
                  "\"" + std::string(v) + "\" is not a simple point: rim " + list(g, g.neighbors(i)) +
                      " is not contractible");
  return g.without_vertex(v);
}

Graph glue_point(const Graph& g, std::span<const VertexLabel> rim_labels, const VertexLabel& new_label,
                 OracleBudget budget, Oracle& oracle) {
  require_fresh(g, new_label);
  auto labels = sorted_unique(rim_labels);
  VertexSet rim_set = require_set(g, labels);
  require_decided(oracle.is_contractible(g, rim_set, budget).verdict, Reason::kNotSimple,
                  "cannot glue \"" + new_label + "\": rim " + list(labels) + " is not contractible");
  return g.with_vertex(new_label, labels);
}

Graph delete_simple_edge(const Graph& g, std::string_view u, std::string_view v, OracleBudget budget,
                         Oracle& oracle) {
  std::size_t a = require_vertex(g, u), b = require_vertex(g, v);
  const std::string name = "(" + std::string(u) + "," + std::string(v) + ")";
  if (!g.adjacent(a, b)) throw TransformError(Reason::kNotAnEdge, name + " is not an edge");
  VertexSet joint = g.neighbors(a) & g.neighbors(b);
  require_decided(oracle.is_contractible(g, joint, budget).verdict, Reason::kNotSimple,
                  name + " is not a simple edge: joint rim " + list(g, joint) + " is not contractible");
  return g.without_edge(u, v);
}

Graph glue_simple_edge(const Graph& g, std::string_view u, std::string_view v, OracleBudget budget,
                       Oracle& oracle) {
  std::size_t a = require_vertex(g, u), b = require_vertex(g, v);
  const std::string name = "(" + std::string(u) + "," + std::string(v) + ")";
  if (a == b) throw TransformError(Reason::kNotAnEdge, name + " would be a self-loop");
  if (g.adjacent(a, b)) throw TransformError(Reason::kAlreadyAnEdge, name + " is already an edge");
  VertexSet joint = g.neighbors(a) & g.neighbors(b);
  require_decided(oracle.is_contractible(g, joint, budget).verdict, Reason::kNotSimple,
                  "cannot glue " + name + ": joint rim " + list(g, joint) + " is not contractible");
  return g.with_edge(u, v);
}

Graph contract_simple_set(const Graph& g, std::span<const VertexLabel> s, const VertexLabel& z,
                          OracleBudget budget, Oracle& oracle) {
  auto labels = sorted_unique(s);
  VertexSet set = require_set(g, labels);
  require_fresh(g, z);
  check_contractible_set(g, set, labels, budget, oracle);
  return contract_unchecked(g, set, z);
}

Graph contract_via_glue_then_delete(const Graph& g, std::span<const VertexLabel> s,
                                    const VertexLabel& z, OracleBudget budget, Oracle& oracle) {
  auto labels = sorted_unique(s);
  VertexSet set = require_set(g, labels);
  require_fresh(g, z);
  check_contractible_set(g, set, labels, budget, oracle);
  std::vector<VertexLabel> rim;
  ball_union(g, set).for_each([&](std::size_t i) { rim.push_back(g.label(i)); });
  try {
    Graph b = glue_point(g, rim, z, budget, oracle);
    for (const auto& v : labels) b = delete_simple_point(b, v, budget, oracle);
    return b;
  } catch (const TransformError& e) {
    throw std::logic_error(std::string("glue-then-delete contraction failed: ") + e.what());
  }
}

Trace contraction_inverse(const Graph& g, std::span<const VertexLabel> s, const VertexLabel& z) {
  auto labels = sorted_unique(s);
  VertexSet set = g.make_set(labels);
  Trace trace;
  trace.initial_digest = digest(contract_unchecked(g, set, z));
  // Members come back in reverse deletion order, each with z in its rim.
  VertexSet present = g.all() - set;
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    std::size_t v = g.index(*it);
    GluePoint step{*it, {z}};
    (g.neighbors(v) & present).for_each([&](std::size_t i) { step.rim.push_back(g.label(i)); });
    std::sort(step.rim.begin(), step.rim.end());
    trace.steps.emplace_back(std::move(step));
    present.insert(v);
  }
  trace.steps.emplace_back(DeletePoint{z});
  return trace;
}

Graph apply(const Graph& g, const Transformation& t, OracleBudget budget, Oracle& oracle,
            Verification verification) {
  const bool checked = verification == Verification::kFull;
  struct Visitor {
    const Graph& g;
    OracleBudget budget;
    Oracle& oracle;
    bool checked;

    Graph operator()(const DeletePoint& s) const {
      if (checked) return delete_simple_point(g, s.vertex, budget, oracle);
      require_vertex(g, s.vertex);
      return g.without_vertex(s.vertex);
    }
    Graph operator()(const GluePoint& s) const {
      if (checked) return glue_point(g, s.rim, s.vertex, budget, oracle);
      require_fresh(g, s.vertex);
      require_set(g, s.rim);
      return g.with_vertex(s.vertex, s.rim);
    }
    Graph operator()(const DeleteEdge& s) const {
      if (checked) return delete_simple_edge(g, s.u, s.v, budget, oracle);
      if (!g.adjacent(require_vertex(g, s.u), require_vertex(g, s.v)))
        throw TransformError(Reason::kNotAnEdge, "(" + s.u + "," + s.v + ") is not an edge");
      return g.without_edge(s.u, s.v);
    }
    Graph operator()(const GlueEdge& s) const {
      if (checked) return glue_simple_edge(g, s.u, s.v, budget, oracle);
      require_vertex(g, s.u);
      require_vertex(g, s.v);
      return g.with_edge(s.u, s.v);
    }
    Graph operator()(const ContractSet& s) const {
      if (checked) return contract_simple_set(g, s.set, s.z, budget, oracle);
      require_fresh(g, s.z);
      VertexSet set = require_set(g, s.set);
      if (set.empty()) throw TransformError(Reason::kEmptySet, "cannot contract an empty set");
      return contract_unchecked(g, set, s.z);
    }
  };
  return std::visit(Visitor{g, budget, oracle, checked}, t);
}

Graph replay(const Trace& trace, const Graph& initial, OracleBudget budget, Oracle& oracle,
             Verification verification) {
  const std::string actual = digest(initial);
  if (actual != trace.initial_digest)
    throw ReplayError(std::nullopt, "initial graph digest " + actual + " does not match trace digest " +
                                        trace.initial_digest);
  Graph current = initial;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    try {
      current = apply(current, trace.steps[i], budget, oracle, verification);
    } catch (const TransformError& e) {
      throw ReplayError(i, "step " + std::to_string(i) + " (" + std::string(kind_name(trace.steps[i])) +
                               "): " + e.what());
    } catch (const GraphError& e) {
      throw ReplayError(i, "step " + std::to_string(i) + " (" + std::string(kind_name(trace.steps[i])) +
                               "): " + e.what());
    }
  }
  return current;
}

}  // namespace dtopo
