#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dtopo/graph.hpp"
#include "dtopo/isomorphism.hpp"

namespace dtopo {

/// Outcome of an oracle query. kUndecided means the call budget ran out.
enum class Verdict { kFalse, kTrue, kUndecided };

inline Verdict to_verdict(bool b) { return b ? Verdict::kTrue : Verdict::kFalse; }
const char* to_string(Verdict v);

/// Caps the number of recursive decision steps spent on one query.
/// Cache hits are free.
struct OracleBudget {
  std::uint64_t max_recursive_calls = 1'000'000;
};

/// Simple-point deletions that reduce a graph to a single vertex.
struct ContractionCertificate {
  std::vector<VertexLabel> deletion_order;
  friend bool operator==(const ContractionCertificate&, const ContractionCertificate&) = default;
};

struct ContractibilityResult {
  Verdict verdict = Verdict::kFalse;
  /// Present exactly when verdict is kTrue.
  std::optional<ContractionCertificate> certificate;
  std::uint64_t recursive_calls = 0;
};

struct OracleOptions {
  /// Reuse answers across queries through an isomorphism-confirmed cache.
  bool use_cache = true;
  /// Reject graphs whose clique complex has Euler characteristic != 1
  /// before searching. Contractible graphs always have characteristic 1.
  bool euler_pruning = true;
};

struct SimplePoints {
  std::vector<VertexLabel> points;
  std::vector<VertexLabel> undecided;
};

struct SimpleEdges {
  std::vector<Edge> edges;
  std::vector<Edge> undecided;
};

struct SimpleSets {
  std::vector<std::vector<VertexLabel>> sets;
  std::vector<std::vector<VertexLabel>> undecided;
};

/// Both halves of the simple-set condition, reported separately.
struct SimpleSetCheck {
  Verdict set_contractible = Verdict::kFalse;
  /// kFalse without evaluation when the set itself is not contractible.
  Verdict union_contractible = Verdict::kFalse;
  Verdict combined() const;
};

struct GreedyReduction {
  Graph residue;
  std::vector<VertexLabel> deleted;
  bool undecided = false;
};

struct CacheStats {
  std::size_t entries = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
};

/**
 * Exact contractibility decision.
 *
 * A graph with one vertex is contractible; a larger graph is contractible
 * iff some vertex x has a contractible rim and G - x is contractible. The
 * search backtracks over every such x (smallest rim first, then label),
 * memoizing on vertex subsets within a query and on isomorphism classes
 * across queries. The empty graph and disconnected graphs are never
 * contractible.
 *
 * The cache is safe for concurrent use.
 */
class Oracle {
 public:
  explicit Oracle(OracleOptions options = {});
  ~Oracle();
  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  const OracleOptions& options() const { return options_; }

  ContractibilityResult is_contractible(const Graph& g, OracleBudget budget = {});
  /// Contractibility of the subgraph of g induced on `subset`.
  ContractibilityResult is_contractible(const Graph& g, const VertexSet& subset,
                                        OracleBudget budget = {});

  Verdict is_simple_point(const Graph& g, std::string_view v, OracleBudget budget = {});
  Verdict is_simple_point(const Graph& g, std::size_t v, OracleBudget budget = {});
  /// Throws GraphError when (u,v) is not an edge.
  Verdict is_simple_edge(const Graph& g, std::string_view u, std::string_view v,
                         OracleBudget budget = {});
  Verdict is_simple_set(const Graph& g, std::span<const VertexLabel> s, OracleBudget budget = {});
  SimpleSetCheck check_simple_set(const Graph& g, const VertexSet& s, OracleBudget budget = {});

  /// Lexicographic order; undecided vertices listed separately.
  SimplePoints enumerate_simple_points(const Graph& g, OracleBudget budget = {});
  SimpleEdges enumerate_simple_edges(const Graph& g, OracleBudget budget = {});
  /// Connected candidate sets only, ordered by size then sorted labels.
  /// Throws GraphError unless 1 <= min_size <= max_size <= |G|.
  SimpleSets enumerate_simple_sets(const Graph& g, std::size_t min_size, std::size_t max_size,
                                   OracleBudget budget = {});

  /// Deletes the lexicographically smallest simple point until none is left.
  /// Stops early, flagged undecided, when a rim query exhausts the budget.
  GreedyReduction greedy_reduce(const Graph& g, OracleBudget budget = {});

  CacheStats cache_stats() const;
  void clear_cache();

 private:
  friend class ContractibilitySearch;
  struct CacheEntry {
    detail::Rows rows;
    detail::Refinement refinement;
    bool answer = false;
    std::vector<std::uint32_t> order;
  };

  /// On hit, answer and (for true) a deletion order in positions of `rows`.
  std::optional<std::pair<bool, std::vector<std::uint32_t>>> lookup(const detail::Rows& rows,
                                                                    const detail::Refinement& ref);
  void store(detail::Rows rows, detail::Refinement ref, bool answer,
             std::vector<std::uint32_t> order);

  OracleOptions options_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalKey, std::vector<CacheEntry>, CanonicalKeyHash> cache_;
  CacheStats stats_;
};

/// Process-wide oracle with default options.
Oracle& shared_oracle();

struct CertificateCheck {
  bool valid = false;
  std::string reason;
};

/// Replays the deletions, re-deciding each rim, and requires a K1 residue.
CertificateCheck verify_certificate(const Graph& g, const ContractionCertificate& cert,
                                    Oracle& oracle, OracleBudget budget = {});

}  // namespace dtopo
