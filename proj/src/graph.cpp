#include "dtopo/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dtopo {

namespace {

std::string join_labels(const std::vector<VertexLabel>& labels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << '"' << labels[i] << '"';
  return os.str();
}

std::size_t count_edges(const std::vector<VertexSet>& rows) {
  std::size_t twice = 0;
  for (const auto& r : rows) twice += r.size();
  return twice / 2;
}

}  // namespace

Graph::Graph(std::vector<VertexLabel> vertices, const std::vector<Edge>& edges) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw GraphError("vertex label must be non-empty");
    if (i > 0 && vertices[i] == vertices[i - 1])
      throw GraphError("duplicate vertex label \"" + vertices[i] + "\"");
  }
  labels_ = std::move(vertices);
  rows_.assign(labels_.size(), VertexSet(labels_.size()));
  for (const auto& [a, b] : edges) {
    auto ia = find(a);
    auto ib = find(b);
    if (!ia) throw GraphError("edge endpoint \"" + a + "\" is not a vertex");
    if (!ib) throw GraphError("edge endpoint \"" + b + "\" is not a vertex");
    if (*ia == *ib) throw GraphError("self-loop at \"" + a + "\"");
    rows_[*ia].insert(*ib);
    rows_[*ib].insert(*ia);
  }
  edge_count_ = count_edges(rows_);
}

Graph Graph::from_rows(std::vector<VertexLabel> sorted_labels, std::vector<VertexSet> rows) {
  Graph g;
  g.labels_ = std::move(sorted_labels);
  g.rows_ = std::move(rows);
  g.edge_count_ = count_edges(g.rows_);
  return g;
}

std::vector<VertexLabel> Graph::numbered(std::size_t n) {
  std::vector<VertexLabel> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Graph Graph::complete(std::size_t n) {
  auto labels = numbered(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(labels[i], labels[j]);
  return Graph(labels, edges);
}

Graph Graph::cycle(std::size_t n) {
  auto labels = numbered(n);
  std::vector<Edge> edges;
  if (n >= 3)
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n]);
  return Graph(labels, edges);
}

Graph Graph::path(std::size_t n) {
  auto labels = numbered(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(labels[i], labels[i + 1]);
  return Graph(labels, edges);
}

Graph Graph::independent(std::size_t n) { return Graph(numbered(n), {}); }

std::optional<std::size_t> Graph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const VertexLabel& a, std::string_view b) { return a < b; });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Graph::index(std::string_view label) const {
  auto i = find(label);
  if (!i) throw GraphError("unknown vertex \"" + std::string(label) + "\"");
  return *i;
}

bool Graph::adjacent(std::string_view a, std::string_view b) const {
  return adjacent(index(a), index(b));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < order(); ++i)
    rows_[i].for_each([&](std::size_t j) {
      if (j > i) out.emplace_back(labels_[i], labels_[j]);
    });
  return out;
}

VertexSet Graph::make_set(std::span<const VertexLabel> labels) const {
  VertexSet s(order());
  for (const auto& l : labels) s.insert(index(l));
  return s;
}

bool Graph::is_connected() const { return dtopo::is_connected(*this, all()); }

Graph Graph::without_vertex(std::string_view v) const {
  VertexSet keep = all();
  keep.erase(index(v));
  return induced_subgraph(*this, keep);
}

Graph Graph::with_vertex(const VertexLabel& v, std::span<const VertexLabel> neighbors) const {
  if (contains(v)) throw GraphError("label \"" + v + "\" already in use");
  auto labels = labels_;
  labels.push_back(v);
  auto edge_list = edges();
  for (const auto& u : neighbors) {
    if (!contains(u)) throw GraphError("unknown vertex \"" + u + "\"");
    edge_list.emplace_back(v, u);
  }
  return Graph(std::move(labels), edge_list);
}

Graph Graph::with_edge(std::string_view u, std::string_view v) const {
  std::size_t a = index(u), b = index(v);
  if (a == b) throw GraphError("self-loop at \"" + std::string(u) + "\"");
  auto rows = rows_;
  rows[a].insert(b);
  rows[b].insert(a);
  return from_rows(labels_, std::move(rows));
}

Graph Graph::without_edge(std::string_view u, std::string_view v) const {
  std::size_t a = index(u), b = index(v);
  auto rows = rows_;
  rows[a].erase(b);
  rows[b].erase(a);
  return from_rows(labels_, std::move(rows));
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  auto members = keep.members();
  std::vector<std::size_t> remap(g.order(), 0);
  std::vector<VertexLabel> labels;
  labels.reserve(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    remap[members[k]] = k;
    labels.push_back(g.label(members[k]));
  }
  std::vector<VertexSet> rows(members.size(), VertexSet(members.size()));
  for (std::size_t k = 0; k < members.size(); ++k)
    (g.neighbors(members[k]) & keep).for_each([&](std::size_t j) { rows[k].insert(remap[j]); });
  return Graph::from_rows(std::move(labels), std::move(rows));
}

Graph induced_subgraph(const Graph& g, std::span<const VertexLabel> keep) {
  return induced_subgraph(g, g.make_set(keep));
}

Graph rim(const Graph& g, std::string_view v) {
  return induced_subgraph(g, g.neighbors(g.index(v)));
}

Graph ball(const Graph& g, std::string_view v) {
  std::size_t i = g.index(v);
  VertexSet s = g.neighbors(i);
  s.insert(i);
  return induced_subgraph(g, s);
}

Graph join(const Graph& g, const Graph& h) {
  std::vector<VertexLabel> shared;
  std::set_intersection(g.vertices().begin(), g.vertices().end(), h.vertices().begin(),
                        h.vertices().end(), std::back_inserter(shared));
  if (!shared.empty()) throw GraphError("join operands share labels: " + join_labels(shared));
  auto labels = g.vertices();
  labels.insert(labels.end(), h.vertices().begin(), h.vertices().end());
  auto edges = g.edges();
  auto he = h.edges();
  edges.insert(edges.end(), he.begin(), he.end());
  for (const auto& a : g.vertices())
    for (const auto& b : h.vertices()) edges.emplace_back(a, b);
  return Graph(std::move(labels), edges);
}

VertexSet ball_union(const Graph& g, const VertexSet& s) {
  VertexSet u = s;
  s.for_each([&](std::size_t i) { u |= g.neighbors(i); });
  return u;
}

Graph neighborhood_union(const Graph& g, std::span<const VertexLabel> s) {
  if (s.empty()) throw GraphError("neighborhood union of an empty set");
  return induced_subgraph(g, ball_union(g, g.make_set(s)));
}

VertexSet external_neighborhood(const Graph& g, const VertexSet& s) {
  return ball_union(g, s) - s;
}

bool is_connected(const Graph& g, const VertexSet& s) {
  std::size_t start = s.first();
  if (start == s.capacity()) return false;
  VertexSet seen(s.capacity());
  seen.insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(s.capacity());
    frontier.for_each([&](std::size_t i) { next |= g.neighbors(i); });
    next &= s;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen == s;
}

std::vector<VertexSet> connected_vertex_sets(const Graph& g, std::size_t min_size,
                                             std::size_t max_size) {
  std::vector<VertexSet> out;
  if (max_size == 0 || g.empty()) return out;
  // Grow connected sets one neighbour at a time; every connected set of size
  // k+1 contains a connected set of size k obtained by dropping a non-cut vertex.
  std::set<std::vector<std::size_t>> layer;
  for (std::size_t i = 0; i < g.order(); ++i) layer.insert({i});
  for (std::size_t size = 1; size <= max_size && !layer.empty(); ++size) {
    if (size >= min_size)
      for (const auto& members : layer) {
        VertexSet s(g.order());
        for (auto i : members) s.insert(i);
        out.push_back(std::move(s));
      }
    if (size == max_size) break;
    std::set<std::vector<std::size_t>> next;
    for (const auto& members : layer) {
      VertexSet s(g.order());
      for (auto i : members) s.insert(i);
      VertexSet frontier = ball_union(g, s) - s;
      frontier.for_each([&](std::size_t v) {
        auto grown = members;
        grown.insert(std::lower_bound(grown.begin(), grown.end(), v), v);
        next.insert(std::move(grown));
      });
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace dtopo
