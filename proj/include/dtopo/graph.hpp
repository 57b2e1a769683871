#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtopo/vertex_set.hpp"

namespace dtopo {

/// Printable, non-empty vertex identifier. Ordered by byte value.
using VertexLabel = std::string;
using Edge = std::pair<VertexLabel, VertexLabel>;

/// Invalid input to a graph operation: unknown labels, collisions, loops.
class GraphError : public std::invalid_argument {
 public:
  explicit GraphError(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * Finite simple undirected graph with string-labelled vertices.
 *
 * Values are immutable. Vertices are kept in lexicographic label order and
 * that order defines the vertex indices used by the index-based accessors,
 * so two equal graphs also agree on every index.
 */
class Graph {
 public:
  /// The empty graph.
  Graph() = default;

  /// Throws GraphError on empty or duplicate labels, self-loops, or edges
  /// with an endpoint outside `vertices`. Duplicate edges are merged.
  Graph(std::vector<VertexLabel> vertices, const std::vector<Edge>& edges);

  /// Builds from labels already sorted and unique plus symmetric rows.
  static Graph from_rows(std::vector<VertexLabel> sorted_labels,
                         std::vector<VertexSet> rows);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  /// n isolated vertices.
  static Graph independent(std::size_t n);
  /// Default numeric labels "1", "2", ... used by the builders above.
  static std::vector<VertexLabel> numbered(std::size_t n);

  std::size_t order() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return labels_.empty(); }

  const std::vector<VertexLabel>& vertices() const { return labels_; }
  const VertexLabel& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Index of `label`; throws GraphError when absent.
  std::size_t index(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  const VertexSet& neighbors(std::size_t i) const { return rows_[i]; }
  const std::vector<VertexSet>& rows() const { return rows_; }
  std::size_t degree(std::size_t i) const { return rows_[i].size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].contains(j); }
  bool adjacent(std::string_view a, std::string_view b) const;

  /// Edges with sorted endpoints, in lexicographic order.
  std::vector<Edge> edges() const;
  VertexSet all() const { return VertexSet::full(order()); }
  VertexSet make_set(std::span<const VertexLabel> labels) const;

  bool is_connected() const;

  Graph without_vertex(std::string_view v) const;
  /// Adds `v` adjacent exactly to `neighbors`.
  Graph with_vertex(const VertexLabel& v, std::span<const VertexLabel> neighbors) const;
  Graph with_edge(std::string_view u, std::string_view v) const;
  Graph without_edge(std::string_view u, std::string_view v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<VertexLabel> labels_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Induced subgraph on `keep` (indices into g).
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
/// Induced subgraph on the given labels; throws GraphError naming an unknown label.
Graph induced_subgraph(const Graph& g, std::span<const VertexLabel> keep);

/// O(v): induced subgraph on the neighbours of v, without v.
Graph rim(const Graph& g, std::string_view v);
/// U(v): induced subgraph on v and its neighbours.
Graph ball(const Graph& g, std::string_view v);

/// Disjoint union plus every edge between the two vertex sets.
/// Throws GraphError listing the shared labels when the sets overlap.
Graph join(const Graph& g, const Graph& h);

/// Indices of the union of the balls of the members of `s`.
VertexSet ball_union(const Graph& g, const VertexSet& s);
/// U(S) as an induced subgraph. Throws GraphError on unknown labels or empty S.
Graph neighborhood_union(const Graph& g, std::span<const VertexLabel> s);

/// Vertices outside `s` adjacent to at least one member of `s`.
VertexSet external_neighborhood(const Graph& g, const VertexSet& s);

/// True when the subgraph induced on `s` is connected (false for empty `s`).
bool is_connected(const Graph& g, const VertexSet& s);

/// Every vertex set S with min_size <= |S| <= max_size whose induced subgraph
/// is connected, ordered by size and then by sorted member indices.
std::vector<VertexSet> connected_vertex_sets(const Graph& g, std::size_t min_size,
                                             std::size_t max_size);

/// Same structure with every label replaced by `rename(label)`.
template <class F>
Graph relabel(const Graph& g, F&& rename) {
  std::vector<VertexLabel> labels;
  labels.reserve(g.order());
  for (const auto& l : g.vertices()) labels.push_back(rename(l));
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) edges.emplace_back(rename(a), rename(b));
  return Graph(std::move(labels), edges);
}

}  // namespace dtopo
