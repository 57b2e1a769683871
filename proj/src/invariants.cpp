#include "dtopo/invariants.hpp"

#include <algorithm>
#include <unordered_map>

namespace dtopo {
namespace detail {

namespace {

template <class Visit>
void expand(const Rows& rows, Simplex& current, const VertexSet& candidates,
            std::size_t max_size, Visit& visit) {
  visit(current);
  if (current.size() == max_size) return;
  candidates.for_each([&](std::size_t v) {
    // Only extend with larger indices so each clique is produced once.
    VertexSet next = candidates & rows[v];
    for (std::size_t u = next.first(); u < next.capacity() && u <= v; u = next.next(u + 1))
      next.erase(u);
    current.push_back(static_cast<std::uint32_t>(v));
    expand(rows, current, next, max_size, visit);
    current.pop_back();
  });
}

template <class Visit>
void for_each_clique(const Rows& rows, const VertexSet& within, std::size_t max_size, Visit&& visit) {
  if (max_size == 0) return;
  Simplex current;
  within.for_each([&](std::size_t v) {
    VertexSet next = rows[v] & within;
    for (std::size_t u = next.first(); u < next.capacity() && u <= v; u = next.next(u + 1))
      next.erase(u);
    current.push_back(static_cast<std::uint32_t>(v));
    expand(rows, current, next, max_size, visit);
    current.pop_back();
  });
}

}  // namespace

std::vector<std::vector<Simplex>> enumerate_cliques(const Rows& rows, const VertexSet& within,
                                                    std::size_t max_size) {
  std::vector<std::vector<Simplex>> out;
  for_each_clique(rows, within, max_size, [&](const Simplex& s) {
    if (out.size() < s.size()) out.resize(s.size());
    out[s.size() - 1].push_back(s);
  });
  for (auto& group : out) std::sort(group.begin(), group.end());
  return out;
}

std::int64_t euler_characteristic(const Rows& rows, const VertexSet& within) {
  std::int64_t chi = 0;
  for_each_clique(rows, within, kFullDimension,
                  [&](const Simplex& s) { chi += (s.size() % 2 == 1) ? 1 : -1; });
  return chi;
}

std::size_t boundary_rank(const std::vector<Simplex>& simplices, const std::vector<Simplex>& faces) {
  // Column reduction with pivots on the largest row index.
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> pivots;
  std::size_t rank = 0;
  Simplex face;
  std::vector<std::uint32_t> column, merged;
  for (const auto& s : simplices) {
    column.clear();
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      auto it = std::lower_bound(faces.begin(), faces.end(), face);
      column.push_back(static_cast<std::uint32_t>(it - faces.begin()));
    }
    std::sort(column.begin(), column.end());
    while (!column.empty()) {
      auto hit = pivots.find(column.back());
      if (hit == pivots.end()) break;
      merged.clear();
      std::set_symmetric_difference(column.begin(), column.end(), hit->second.begin(),
                                    hit->second.end(), std::back_inserter(merged));
      column.swap(merged);
    }
    if (!column.empty()) {
      ++rank;
      pivots.emplace(column.back(), column);
    }
  }
  return rank;
}

}  // namespace detail

std::vector<std::size_t> CliqueComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& group : cliques_by_dim) out.push_back(group.size());
  return out;
}

CliqueComplex clique_complex(const Graph& g, std::size_t max_dim) {
  const std::size_t max_size = max_dim == kFullDimension ? kFullDimension : max_dim + 1;
  auto groups = detail::enumerate_cliques(g.rows(), g.all(), max_size);
  CliqueComplex cc;
  cc.max_dim = max_dim == kFullDimension ? (groups.empty() ? 0 : groups.size() - 1) : max_dim;
  cc.cliques_by_dim.resize(max_dim == kFullDimension ? groups.size() : max_dim + 1);
  for (std::size_t k = 0; k < groups.size(); ++k)
    for (const auto& s : groups[k]) {
      std::vector<VertexLabel> tuple;
      for (auto v : s) tuple.push_back(g.label(v));
      cc.cliques_by_dim[k].push_back(std::move(tuple));
    }
  return cc;
}

std::vector<std::size_t> clique_counts(const Graph& g) {
  std::vector<std::size_t> counts;
  detail::Simplex dummy;
  auto groups = detail::enumerate_cliques(g.rows(), g.all(), kFullDimension);
  for (const auto& group : groups) counts.push_back(group.size());
  return counts;
}

std::size_t clique_number(const Graph& g) { return clique_counts(g).size(); }

std::int64_t euler_characteristic(const Graph& g) {
  return detail::euler_characteristic(g.rows(), g.all());
}

BettiVector betti_numbers(const Graph& g, std::size_t max_dim) {
  std::vector<std::vector<detail::Simplex>> groups;
  if (max_dim == kFullDimension) {
    groups = detail::enumerate_cliques(g.rows(), g.all(), kFullDimension);
    max_dim = groups.empty() ? 0 : groups.size() - 1;
  } else {
    groups = detail::enumerate_cliques(g.rows(), g.all(), max_dim + 2);
  }
  groups.resize(std::max(groups.size(), max_dim + 2));
  // rank[k] is the rank of the boundary from dimension k to k-1.
  std::vector<std::size_t> rank(max_dim + 2, 0);
  for (std::size_t k = 1; k <= max_dim + 1; ++k)
    rank[k] = detail::boundary_rank(groups[k], groups[k - 1]);
  BettiVector b;
  for (std::size_t k = 0; k <= max_dim; ++k) b.betti.push_back(groups[k].size() - rank[k] - rank[k + 1]);
  return b;
}

InvariantSummary summarize(const Graph& g) {
  InvariantSummary s;
  s.clique_counts = clique_counts(g);
  for (std::size_t k = 0; k < s.clique_counts.size(); ++k)
    s.euler += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(s.clique_counts[k]);
  s.betti = betti_numbers(g, kFullDimension);
  return s;
}

}  // namespace dtopo
