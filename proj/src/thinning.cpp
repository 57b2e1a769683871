#include "dtopo/thinning.hpp"

#include <map>
#include <set>

#include "dtopo/graph_io.hpp"

namespace dtopo {

namespace {

void check_config(const ThinningConfig& cfg) {
  if (cfg.max_set_size < 2) throw GraphError("max_set_size must be at least 2");
}

// Largest sets first, so one contraction removes as many points as possible;
// within a size, by sorted labels.
std::vector<VertexSet> set_candidates(const Graph& g, std::size_t max_set_size) {
  std::vector<VertexSet> out;
  for (std::size_t size = std::min(max_set_size, g.order()); size >= 2; --size) {
    auto layer = connected_vertex_sets(g, size, size);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

class Thinner {
 public:
  Thinner(const Graph& g, const ThinningConfig& cfg, Oracle& oracle)
      : graph_(g), cfg_(cfg), oracle_(oracle), used_(g.vertices().begin(), g.vertices().end()) {}

  ThinningReport run() {
    ThinningReport report;
    report.trace.initial_digest = digest(graph_);
    report.max_set_size = cfg_.max_set_size;
    while (true) {
      while (delete_one_point(report)) {
      }
      if (!contract_one_set(report)) break;
    }
    report.skeleton = graph_;
    report.stats = stats_;
    return report;
  }

 private:
  Verdict status(std::size_t v) {
    const auto& label = graph_.label(v);
    if (auto it = status_.find(label); it != status_.end()) return it->second;
    Verdict verdict = oracle_.is_simple_point(graph_, v, cfg_.budget);
    if (verdict == Verdict::kUndecided) ++stats_.undecided_candidates_skipped;
    status_.emplace(label, verdict);
    return verdict;
  }

  void invalidate(const VertexSet& s) {
    s.for_each([&](std::size_t i) { status_.erase(graph_.label(i)); });
  }

  bool delete_one_point(ThinningReport& report) {
    for (std::size_t v = 0; v < graph_.order(); ++v) {
      if (status(v) != Verdict::kTrue) continue;
      VertexLabel label = graph_.label(v);
      // Only the neighbours' rims change.
      invalidate(graph_.neighbors(v));
      status_.erase(label);
      graph_ = graph_.without_vertex(label);
      report.trace.steps.emplace_back(DeletePoint{label});
      ++stats_.points_deleted;
      return true;
    }
    return false;
  }

  bool contract_one_set(ThinningReport& report) {
    if (graph_.order() < 2) return false;
    for (const auto& s : set_candidates(graph_, cfg_.max_set_size)) {
      Verdict verdict = oracle_.check_simple_set(graph_, s, cfg_.budget).combined();
      if (verdict == Verdict::kUndecided) ++stats_.undecided_candidates_skipped;
      if (verdict != Verdict::kTrue) continue;
      ContractSet step;
      s.for_each([&](std::size_t i) { step.set.push_back(graph_.label(i)); });
      step.z = fresh_label(graph_, used_);
      used_.insert(step.z);
      // Rims change only for the external neighbourhood.
      invalidate(ball_union(graph_, s));
      graph_ = contract_simple_set(graph_, step.set, step.z, cfg_.budget, oracle_);
      report.trace.steps.emplace_back(std::move(step));
      ++stats_.sets_contracted;
      return true;
    }
    return false;
  }

  Graph graph_;
  const ThinningConfig& cfg_;
  Oracle& oracle_;
  std::set<VertexLabel> used_;
  std::map<VertexLabel, Verdict> status_;
  ThinningStats stats_;
};

}  // namespace

ThinningReport thin(const Graph& g, const ThinningConfig& cfg, Oracle& oracle) {
  check_config(cfg);
  return Thinner(g, cfg, oracle).run();
}

Verdict is_skeleton(const Graph& g, const ThinningConfig& cfg, Oracle& oracle) {
  check_config(cfg);
  bool undecided = false;
  for (std::size_t v = 0; v < g.order(); ++v) {
    Verdict verdict = oracle.is_simple_point(g, v, cfg.budget);
    if (verdict == Verdict::kTrue) return Verdict::kFalse;
    undecided |= verdict == Verdict::kUndecided;
  }
  if (g.order() >= 2) {
    for (const auto& s : set_candidates(g, cfg.max_set_size)) {
      Verdict verdict = oracle.check_simple_set(g, s, cfg.budget).combined();
      if (verdict == Verdict::kTrue) return Verdict::kFalse;
      undecided |= verdict == Verdict::kUndecided;
    }
  }
  return undecided ? Verdict::kUndecided : Verdict::kTrue;
}

}  // namespace dtopo
