#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the
// library's isomorphism, contractibility or homology code, so tests can
// cross-check against it.

#include <cstdint>
#include <random>
#include <vector>

#include "dtopo/graph.hpp"

namespace dtopo::testing {

/// Adjacency rows as bit masks; n <= 8.
struct Small {
  int n = 0;
  std::vector<std::uint8_t> rows;
};

Graph to_graph(const Small& s);
Small to_small(const Graph& g);

/// Minimum upper-triangle code over degree-respecting permutations.
std::uint64_t canonical_code(const Small& s);

/// All graphs on n vertices up to isomorphism (n <= 8).
std::vector<Small> all_graphs(int n);
/// Connected graphs on n vertices up to isomorphism (n <= 8).
std::vector<Small> connected_graphs(int n);

/// Canonical codes of the contractible graphs on exactly n vertices, for
/// n = 1..max_n, built literally from K1 by gluing a vertex whose rim is an
/// already-built contractible induced subgraph.
std::vector<std::vector<std::uint64_t>> contractible_family(int max_n);

/// Clique counts by size (index k -> number of (k+1)-cliques) via subset scan.
std::vector<std::size_t> brute_clique_counts(const Graph& g);

/// GF(2) Betti numbers through dense Gaussian elimination, b_0..b_max_dim.
std::vector<std::size_t> dense_betti(const Graph& g, std::size_t max_dim);

/// Drops trailing zeros, so Betti vectors of different lengths compare.
std::vector<std::size_t> trimmed(std::vector<std::size_t> v);

/// Tries every bijection; n <= 9.
bool brute_isomorphic(const Graph& a, const Graph& b);

/// Erdos-Renyi graph labelled "v0".."v{n-1}".
Graph random_graph(std::mt19937& rng, std::size_t n, double p);

/// Same graph with labels permuted at random.
Graph shuffle_labels(const Graph& g, std::mt19937& rng);

}  // namespace dtopo::testing
