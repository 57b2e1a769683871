#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "dtopo/graph.hpp"

namespace dtopo {

/**
 * Isomorphism invariant from iterated degree refinement.
 *
 * Unequal keys prove two graphs non-isomorphic. Equal keys prove nothing;
 * confirm with is_isomorphic.
 */
struct CanonicalKey {
  std::vector<std::uint32_t> code;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const;
};

CanonicalKey canonical_key(const Graph& g);

/// Exact test, backtracking over refined colour classes.
bool is_isomorphic(const Graph& g, const Graph& h);

namespace detail {

using Rows = std::vector<VertexSet>;

struct Refinement {
  CanonicalKey key;
  /// Stable colour per vertex; comparable across graphs with equal keys.
  std::vector<std::uint32_t> colors;
};

Refinement refine(const Rows& rows);

/// Some vertex map a -> b that is an isomorphism, when one exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const Rows& a, const Refinement& ra,
                                                         const Rows& b, const Refinement& rb);

/// Rows of the subgraph induced on `keep`, reindexed 0..|keep|-1 in index order.
Rows extract(const Rows& rows, const VertexSet& keep);

}  // namespace detail
}  // namespace dtopo
