#pragma once

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dtopo/contractibility.hpp"
#include "dtopo/graph.hpp"

namespace dtopo {

struct DeletePoint {
  VertexLabel vertex;
  friend bool operator==(const DeletePoint&, const DeletePoint&) = default;
};
struct GluePoint {
  VertexLabel vertex;
  std::vector<VertexLabel> rim;  // sorted
  friend bool operator==(const GluePoint&, const GluePoint&) = default;
};
struct DeleteEdge {
  VertexLabel u, v;
  friend bool operator==(const DeleteEdge&, const DeleteEdge&) = default;
};
struct GlueEdge {
  VertexLabel u, v;
  friend bool operator==(const GlueEdge&, const GlueEdge&) = default;
};
struct ContractSet {
  std::vector<VertexLabel> set;  // sorted
  VertexLabel z;
  friend bool operator==(const ContractSet&, const ContractSet&) = default;
};

/// One contractible transformation, with what is needed to replay and re-check it.
using Transformation = std::variant<DeletePoint, GluePoint, DeleteEdge, GlueEdge, ContractSet>;

/// "delete_point", "glue_point", "delete_edge", "glue_edge" or "contract_set".
std::string_view kind_name(const Transformation& t);

/// Replayable homotopy-equivalence certificate between digest-identified endpoints.
struct Trace {
  std::string initial_digest;
  std::vector<Transformation> steps;
  friend bool operator==(const Trace&, const Trace&) = default;
};

class TransformError : public std::runtime_error {
 public:
  enum class Reason {
    kNotSimple,
    kUndecided,
    kLabelCollision,
    kUnknownLabel,
    kNotAnEdge,
    kAlreadyAnEdge,
    kSetNotContractible,
    kNeighborhoodNotContractible,
    kEmptySet,
  };
  TransformError(Reason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Replay failure. `step` is absent for a digest mismatch.
class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::optional<std::size_t> step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  std::optional<std::size_t> step() const { return step_; }

 private:
  std::optional<std::size_t> step_;
};

/// Smallest "z<k>" that is neither a vertex of g nor in `avoid`.
VertexLabel fresh_label(const Graph& g, const std::set<VertexLabel>& avoid = {});

Graph delete_simple_point(const Graph& g, std::string_view v, OracleBudget budget = {},
                          Oracle& oracle = shared_oracle());

/// Adds `new_label` adjacent exactly to `rim`, which must induce a contractible subgraph.
Graph glue_point(const Graph& g, std::span<const VertexLabel> rim, const VertexLabel& new_label,
                 OracleBudget budget = {}, Oracle& oracle = shared_oracle());

Graph delete_simple_edge(const Graph& g, std::string_view u, std::string_view v,
                         OracleBudget budget = {}, Oracle& oracle = shared_oracle());

/// Adds the non-edge (u,v) when the common neighbourhood is contractible.
Graph glue_simple_edge(const Graph& g, std::string_view u, std::string_view v,
                       OracleBudget budget = {}, Oracle& oracle = shared_oracle());

/// Replaces the simple set `s` by `z`, adjacent to the external neighbourhood of `s`.
Graph contract_simple_set(const Graph& g, std::span<const VertexLabel> s, const VertexLabel& z,
                          OracleBudget budget = {}, Oracle& oracle = shared_oracle());

/**
 * Same result as contract_simple_set, built from checked primitive moves:
 * glue z with rim U(S), then delete the members of S in label order. Each
 * member is simple at its deletion because its rim is a cone with apex z.
 * A failing intermediate step throws std::logic_error.
 */
Graph contract_via_glue_then_delete(const Graph& g, std::span<const VertexLabel> s,
                                    const VertexLabel& z, OracleBudget budget = {},
                                    Oracle& oracle = shared_oracle());

/// Trace from the contracted graph back to g: glue the members of s back
/// (last deleted first), then delete z.
Trace contraction_inverse(const Graph& g, std::span<const VertexLabel> s, const VertexLabel& z);

enum class Verification {
  kFull,
  /// Structural application only. For traces that were already verified.
  kSkipPreconditions,
};

/// Applies one step; preconditions are checked unless verification is lowered.
Graph apply(const Graph& g, const Transformation& t, OracleBudget budget = {},
            Oracle& oracle = shared_oracle(), Verification verification = Verification::kFull);

/// Throws ReplayError on digest mismatch or at the first failing step.
Graph replay(const Trace& trace, const Graph& initial, OracleBudget budget = {},
             Oracle& oracle = shared_oracle(), Verification verification = Verification::kFull);

}  // namespace dtopo
