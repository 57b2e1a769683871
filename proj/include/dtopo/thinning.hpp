#pragma once

#include <cstddef>

#include "dtopo/contractibility.hpp"
#include "dtopo/graph.hpp"
#include "dtopo/transforms.hpp"

namespace dtopo {

struct ThinningConfig {
  /// Largest simple set tried in the contraction phase; at least 2.
  std::size_t max_set_size = 3;
  /// Applied to every individual oracle query.
  OracleBudget budget;
};

struct ThinningStats {
  std::size_t points_deleted = 0;
  std::size_t sets_contracted = 0;
  /// Candidate checks that ran out of budget and were treated as not simple.
  std::size_t undecided_candidates_skipped = 0;
  friend bool operator==(const ThinningStats&, const ThinningStats&) = default;
};

struct ThinningReport {
  Graph skeleton;
  /// Replays from the input graph to `skeleton`.
  Trace trace;
  ThinningStats stats;
  std::size_t max_set_size = 0;
};

/**
 * Two-phase skeletonization.
 *
 * Phase one deletes the lexicographically smallest simple point until none
 * remains. Phase two contracts the first simple set, trying sizes from
 * max_set_size down to 2 and sorted labels within a size, and hands back to
 * phase one. Stops when
 * neither phase applies. Undecided candidates are skipped, never treated as
 * simple, so the skeleton is always homotopy equivalent to the input.
 *
 * Contracted sets get fresh labels "z<k>" that avoid every label seen so far
 * in the run.
 */
ThinningReport thin(const Graph& g, const ThinningConfig& cfg = {}, Oracle& oracle = shared_oracle());

/// kTrue iff g has no simple point and no simple set of size 2..max_set_size.
Verdict is_skeleton(const Graph& g, const ThinningConfig& cfg = {}, Oracle& oracle = shared_oracle());

}  // namespace dtopo
