#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "dtopo/graph.hpp"
#include "dtopo/isomorphism.hpp"

namespace dtopo {

inline constexpr std::size_t kFullDimension = std::numeric_limits<std::size_t>::max();

/// Clique (flag) complex: k-simplices are the (k+1)-vertex complete subgraphs.
struct CliqueComplex {
  /// cliques_by_dim[k] holds sorted label tuples of size k+1, in lexicographic order.
  std::vector<std::vector<std::vector<VertexLabel>>> cliques_by_dim;
  std::size_t max_dim = 0;

  std::vector<std::size_t> counts() const;
};

/// Ranks b_0.. of clique-complex homology over GF(2).
struct BettiVector {
  std::vector<std::size_t> betti;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// All cliques with at most max_dim+1 vertices. For kFullDimension the
/// cap is the clique number and no empty trailing dimensions are listed.
CliqueComplex clique_complex(const Graph& g, std::size_t max_dim);

/// Number of k-cliques for k = 1..clique number.
std::vector<std::size_t> clique_counts(const Graph& g);
std::size_t clique_number(const Graph& g);

/// Alternating clique count over the full complex.
std::int64_t euler_characteristic(const Graph& g);

/// b_0..b_max_dim. kFullDimension means up to the top dimension of the complex.
BettiVector betti_numbers(const Graph& g, std::size_t max_dim);

struct InvariantSummary {
  std::int64_t euler = 0;
  BettiVector betti;
  std::vector<std::size_t> clique_counts;
};

/// Full-dimension Euler characteristic, Betti vector and clique counts.
InvariantSummary summarize(const Graph& g);

namespace detail {

using Simplex = std::vector<std::uint32_t>;

/// Cliques of size 1..max_size inside `within`, grouped by size-1, each sorted,
/// groups in lexicographic order.
std::vector<std::vector<Simplex>> enumerate_cliques(const Rows& rows, const VertexSet& within,
                                                    std::size_t max_size);

/// Euler characteristic of the clique complex of the subgraph on `within`.
std::int64_t euler_characteristic(const Rows& rows, const VertexSet& within);

/// GF(2) rank of the boundary map from `simplices` onto `faces` (faces sorted).
std::size_t boundary_rank(const std::vector<Simplex>& simplices, const std::vector<Simplex>& faces);

}  // namespace detail
}  // namespace dtopo
