#include "dtopo/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace dtopo {

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto w : k.code) {
    h ^= w;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace detail {

Rows extract(const Rows& rows, const VertexSet& keep) {
  auto members = keep.members();
  std::vector<std::size_t> remap(keep.capacity(), 0);
  for (std::size_t k = 0; k < members.size(); ++k) remap[members[k]] = k;
  Rows out(members.size(), VertexSet(members.size()));
  for (std::size_t k = 0; k < members.size(); ++k)
    (rows[members[k]] & keep).for_each([&](std::size_t j) { out[k].insert(remap[j]); });
  return out;
}

Refinement refine(const Rows& rows) {
  const std::size_t n = rows.size();
  Refinement r;
  r.colors.assign(n, 0);
  r.key.code.push_back(static_cast<std::uint32_t>(n));
  std::size_t classes = 1;
  using Signature = std::vector<std::uint32_t>;
  while (true) {
    std::vector<Signature> sigs(n);
    for (std::size_t v = 0; v < n; ++v) {
      Signature& s = sigs[v];
      s.push_back(r.colors[v]);
      rows[v].for_each([&](std::size_t u) { s.push_back(r.colors[u]); });
      std::sort(s.begin() + 1, s.end());
    }
    std::map<Signature, std::uint32_t> ids;
    for (const auto& s : sigs) ids.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<std::uint32_t> counts(ids.size(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      r.colors[v] = ids[sigs[v]];
      ++counts[r.colors[v]];
    }
    // Record the round: each class with its multiplicity and signature.
    r.key.code.push_back(static_cast<std::uint32_t>(ids.size()));
    for (const auto& [sig, id] : ids) {
      r.key.code.push_back(counts[id]);
      r.key.code.push_back(static_cast<std::uint32_t>(sig.size()));
      r.key.code.insert(r.key.code.end(), sig.begin(), sig.end());
    }
    if (ids.size() == classes && classes != 0) break;
    classes = ids.size();
    if (n == 0) break;
  }
  return r;
}

namespace {

class Matcher {
 public:
  Matcher(const Rows& a, const Refinement& ra, const Rows& b, const Refinement& rb)
      : a_(a), ra_(ra), b_(b), rb_(rb), map_(a.size(), kNone), used_(b.size(), false) {
    order_vertices();
  }

  bool run() { return extend(0); }
  const std::vector<std::size_t>& mapping() const { return map_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Connectivity-first order: each next vertex has the most already-placed
  // neighbours, ties broken by the smaller colour class.
  void order_vertices() {
    const std::size_t n = a_.size();
    std::vector<std::size_t> class_size(n + 1, 0);
    for (auto c : ra_.colors) ++class_size[c];
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> placed_neighbours(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = kNone;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == kNone || placed_neighbours[v] > placed_neighbours[best] ||
            (placed_neighbours[v] == placed_neighbours[best] &&
             class_size[ra_.colors[v]] < class_size[ra_.colors[best]]))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      a_[best].for_each([&](std::size_t u) { ++placed_neighbours[u]; });
    }
  }

  bool consistent(std::size_t depth, std::size_t va, std::size_t vb) const {
    for (std::size_t k = 0; k < depth; ++k) {
      std::size_t ua = order_[k];
      if (a_[va].contains(ua) != b_[vb].contains(map_[ua])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    std::size_t va = order_[depth];
    for (std::size_t vb = 0; vb < b_.size(); ++vb) {
      if (used_[vb] || rb_.colors[vb] != ra_.colors[va]) continue;
      if (!consistent(depth, va, vb)) continue;
      map_[va] = vb;
      used_[vb] = true;
      if (extend(depth + 1)) return true;
      used_[vb] = false;
      map_[va] = kNone;
    }
    return false;
  }

  const Rows& a_;
  const Refinement& ra_;
  const Rows& b_;
  const Refinement& rb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Rows& a, const Refinement& ra,
                                                         const Rows& b, const Refinement& rb) {
  if (ra.key != rb.key) return std::nullopt;
  Matcher m(a, ra, b, rb);
  if (!m.run()) return std::nullopt;
  return m.mapping();
}

}  // namespace detail

CanonicalKey canonical_key(const Graph& g) { return detail::refine(g.rows()).key; }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto rg = detail::refine(g.rows());
  auto rh = detail::refine(h.rows());
  return detail::find_isomorphism(g.rows(), rg, h.rows(), rh).has_value();
}

}  // namespace dtopo
