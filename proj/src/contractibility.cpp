#include "dtopo/contractibility.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "dtopo/invariants.hpp"

namespace dtopo {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kUndecided: return "undecided";
  }
  return "?";
}

Verdict SimpleSetCheck::combined() const {
  if (set_contractible == Verdict::kFalse || union_contractible == Verdict::kFalse)
    return Verdict::kFalse;
  if (set_contractible == Verdict::kUndecided || union_contractible == Verdict::kUndecided)
    return Verdict::kUndecided;
  return Verdict::kTrue;
}

namespace {

struct BudgetExhausted {};

// Small connected graphs are decided without search or caching.
constexpr std::size_t kCacheMinSize = 4;

}  // namespace

/// One top-level query: subsets of a fixed base graph, memoized by subset.
class ContractibilitySearch {
 public:
  ContractibilitySearch(Oracle& oracle, const detail::Rows& rows, OracleBudget budget)
      : oracle_(oracle), rows_(rows), budget_(budget) {}

  bool contractible(const VertexSet& s, bool homotopy_type_known) {
    const std::size_t size = s.size();
    if (size == 0) return false;
    if (size == 1) return true;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    if (!connected(s)) return remember(s, false);

    std::optional<detail::Rows> compact;
    std::optional<detail::Refinement> ref;
    const bool cached = oracle_.options_.use_cache && size >= kCacheMinSize;
    if (cached) {
      compact = detail::extract(rows_, s);
      ref = detail::refine(*compact);
      if (auto hit = oracle_.lookup(*compact, *ref)) {
        if (hit->first) {
          auto members = s.members();
          std::vector<std::size_t> order;
          for (auto pos : hit->second) order.push_back(members[pos]);
          resolved_[s] = std::move(order);
        }
        return remember(s, hit->first);
      }
    }

    if (++calls_ > budget_.max_recursive_calls) throw BudgetExhausted{};

    bool answer = false;
    if (oracle_.options_.euler_pruning && !homotopy_type_known && size >= kCacheMinSize &&
        detail::euler_characteristic(rows_, s) != 1) {
      answer = false;
    } else {
      answer = search(s);
    }
    remember(s, answer);
    if (cached) {
      std::vector<std::uint32_t> order;
      if (answer) {
        auto members = s.members();
        std::vector<std::uint32_t> position(rows_.size(), 0);
        for (std::size_t k = 0; k < members.size(); ++k) position[members[k]] = static_cast<std::uint32_t>(k);
        for (auto v : deletion_order(s)) order.push_back(position[v]);
      }
      oracle_.store(std::move(*compact), std::move(*ref), answer, std::move(order));
    }
    return answer;
  }

  /// Vertices to delete from s, in order, leaving one vertex. Requires a true answer for s.
  std::vector<std::size_t> deletion_order(VertexSet s) const {
    std::vector<std::size_t> order;
    while (s.size() > 1) {
      if (auto it = resolved_.find(s); it != resolved_.end()) {
        order.insert(order.end(), it->second.begin(), it->second.end());
        break;
      }
      std::size_t x = choice_.at(s);
      order.push_back(x);
      s.erase(x);
    }
    return order;
  }

  std::uint64_t calls() const { return calls_; }

 private:
  bool search(const VertexSet& s) {
    struct Candidate {
      std::size_t rim_size;
      std::size_t vertex;
    };
    std::vector<Candidate> candidates;
    s.for_each([&](std::size_t x) { candidates.push_back({rows_[x].intersection_size(s), x}); });
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return a.rim_size != b.rim_size ? a.rim_size < b.rim_size : a.vertex < b.vertex;
    });
    for (const auto& c : candidates) {
      VertexSet rest = s;
      rest.erase(c.vertex);
      if (!contractible(rows_[c.vertex] & s, false)) continue;
      // Removing a simple point keeps the homotopy type, so pruning is moot.
      if (!contractible(rest, true)) continue;
      choice_[s] = c.vertex;
      return true;
    }
    return false;
  }

  bool connected(const VertexSet& s) const {
    VertexSet seen(s.capacity());
    seen.insert(s.first());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next(s.capacity());
      frontier.for_each([&](std::size_t i) { next |= rows_[i]; });
      next &= s;
      next -= seen;
      seen |= next;
      frontier = std::move(next);
    }
    return seen == s;
  }

  bool remember(const VertexSet& s, bool answer) {
    memo_.emplace(s, answer);
    return answer;
  }

  Oracle& oracle_;
  const detail::Rows& rows_;
  OracleBudget budget_;
  std::uint64_t calls_ = 0;
  std::unordered_map<VertexSet, bool, VertexSetHash> memo_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> choice_;
  std::unordered_map<VertexSet, std::vector<std::size_t>, VertexSetHash> resolved_;
};

Oracle::Oracle(OracleOptions options) : options_(options) {}
Oracle::~Oracle() = default;

std::optional<std::pair<bool, std::vector<std::uint32_t>>> Oracle::lookup(
    const detail::Rows& rows, const detail::Refinement& ref) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(ref.key); it != cache_.end()) {
      for (const auto& entry : it->second) {
        auto map = detail::find_isomorphism(rows, ref, entry.rows, entry.refinement);
        if (!map) continue;
        std::vector<std::uint32_t> order;
        if (entry.answer) {
          // Entry positions back to positions of `rows`.
          std::vector<std::uint32_t> inverse(map->size());
          for (std::size_t a = 0; a < map->size(); ++a) inverse[(*map)[a]] = static_cast<std::uint32_t>(a);
          for (auto pos : entry.order) order.push_back(inverse[pos]);
        }
        lock.unlock();
        std::unique_lock w(mutex_);
        ++stats_.hits;
        return std::make_pair(entry.answer, std::move(order));
      }
    }
  }
  std::unique_lock w(mutex_);
  ++stats_.misses;
  return std::nullopt;
}

void Oracle::store(detail::Rows rows, detail::Refinement ref, bool answer,
                   std::vector<std::uint32_t> order) {
  std::unique_lock lock(mutex_);
  auto& bucket = cache_[ref.key];
  // A concurrent query may have stored the same class already.
  for (const auto& entry : bucket)
    if (detail::find_isomorphism(rows, ref, entry.rows, entry.refinement)) return;
  bucket.push_back(CacheEntry{std::move(rows), std::move(ref), answer, std::move(order)});
  ++stats_.entries;
}

CacheStats Oracle::cache_stats() const {
  std::shared_lock lock(mutex_);
  return stats_;
}

void Oracle::clear_cache() {
  std::unique_lock lock(mutex_);
  cache_.clear();
  stats_ = {};
}

ContractibilityResult Oracle::is_contractible(const Graph& g, OracleBudget budget) {
  return is_contractible(g, g.all(), budget);
}

ContractibilityResult Oracle::is_contractible(const Graph& g, const VertexSet& subset,
                                              OracleBudget budget) {
  ContractibilityResult result;
  ContractibilitySearch search(*this, g.rows(), budget);
  try {
    bool yes = search.contractible(subset, false);
    result.verdict = to_verdict(yes);
    if (yes) {
      ContractionCertificate cert;
      for (auto v : search.deletion_order(subset)) cert.deletion_order.push_back(g.label(v));
      result.certificate = std::move(cert);
    }
  } catch (const BudgetExhausted&) {
    result.verdict = Verdict::kUndecided;
  }
  result.recursive_calls = search.calls();
  return result;
}

Verdict Oracle::is_simple_point(const Graph& g, std::string_view v, OracleBudget budget) {
  return is_simple_point(g, g.index(v), budget);
}

Verdict Oracle::is_simple_point(const Graph& g, std::size_t v, OracleBudget budget) {
  return is_contractible(g, g.neighbors(v), budget).verdict;
}

Verdict Oracle::is_simple_edge(const Graph& g, std::string_view u, std::string_view v,
                               OracleBudget budget) {
  std::size_t a = g.index(u), b = g.index(v);
  if (!g.adjacent(a, b))
    throw GraphError("(" + std::string(u) + "," + std::string(v) + ") is not an edge");
  return is_contractible(g, g.neighbors(a) & g.neighbors(b), budget).verdict;
}

SimpleSetCheck Oracle::check_simple_set(const Graph& g, const VertexSet& s, OracleBudget budget) {
  if (s.empty()) throw GraphError("simple-set query on an empty set");
  SimpleSetCheck check;
  check.set_contractible = is_contractible(g, s, budget).verdict;
  if (check.set_contractible == Verdict::kFalse) return check;
  check.union_contractible = is_contractible(g, ball_union(g, s), budget).verdict;
  return check;
}

Verdict Oracle::is_simple_set(const Graph& g, std::span<const VertexLabel> s, OracleBudget budget) {
  return check_simple_set(g, g.make_set(s), budget).combined();
}

SimplePoints Oracle::enumerate_simple_points(const Graph& g, OracleBudget budget) {
  SimplePoints out;
  for (std::size_t v = 0; v < g.order(); ++v) {
    switch (is_simple_point(g, v, budget)) {
      case Verdict::kTrue: out.points.push_back(g.label(v)); break;
      case Verdict::kUndecided: out.undecided.push_back(g.label(v)); break;
      case Verdict::kFalse: break;
    }
  }
  return out;
}

SimpleEdges Oracle::enumerate_simple_edges(const Graph& g, OracleBudget budget) {
  SimpleEdges out;
  for (const auto& e : g.edges()) {
    switch (is_simple_edge(g, e.first, e.second, budget)) {
      case Verdict::kTrue: out.edges.push_back(e); break;
      case Verdict::kUndecided: out.undecided.push_back(e); break;
      case Verdict::kFalse: break;
    }
  }
  return out;
}

SimpleSets Oracle::enumerate_simple_sets(const Graph& g, std::size_t min_size,
                                         std::size_t max_size, OracleBudget budget) {
  if (min_size < 1 || min_size > max_size || max_size > g.order())
    throw GraphError("simple-set sizes must satisfy 1 <= min <= max <= |G|");
  SimpleSets out;
  for (const auto& s : connected_vertex_sets(g, min_size, max_size)) {
    Verdict v = check_simple_set(g, s, budget).combined();
    if (v == Verdict::kFalse) continue;
    std::vector<VertexLabel> labels;
    s.for_each([&](std::size_t i) { labels.push_back(g.label(i)); });
    (v == Verdict::kTrue ? out.sets : out.undecided).push_back(std::move(labels));
  }
  return out;
}

GreedyReduction Oracle::greedy_reduce(const Graph& g, OracleBudget budget) {
  GreedyReduction out{g, {}, false};
  while (true) {
    bool deleted = false;
    for (std::size_t v = 0; v < out.residue.order(); ++v) {
      Verdict verdict = is_simple_point(out.residue, v, budget);
      if (verdict == Verdict::kUndecided) {
        out.undecided = true;
        return out;
      }
      if (verdict == Verdict::kTrue) {
        out.deleted.push_back(out.residue.label(v));
        out.residue = out.residue.without_vertex(out.residue.label(v));
        deleted = true;
        break;
      }
    }
    if (!deleted) return out;
  }
}

Oracle& shared_oracle() {
  static Oracle oracle;
  return oracle;
}

CertificateCheck verify_certificate(const Graph& g, const ContractionCertificate& cert,
                                    Oracle& oracle, OracleBudget budget) {
  Graph current = g;
  for (std::size_t i = 0; i < cert.deletion_order.size(); ++i) {
    const auto& v = cert.deletion_order[i];
    auto idx = current.find(v);
    if (!idx) return {false, "step " + std::to_string(i) + ": \"" + v + "\" is not a vertex"};
    Verdict verdict = oracle.is_simple_point(current, *idx, budget);
    if (verdict != Verdict::kTrue)
      return {false, "step " + std::to_string(i) + ": \"" + v + "\" is not a simple point (" +
                         to_string(verdict) + ")"};
    current = current.without_vertex(v);
  }
  if (current.order() != 1)
    return {false, "residue has " + std::to_string(current.order()) + " vertices, expected 1"};
  return {true, {}};
}

}  // namespace dtopo
