#include "dtopo/cubical.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dtopo {

ImplicitSurface ImplicitSurface::sphere(std::vector<double> center, double radius) {
  if (center.size() != 2 && center.size() != 3)
    throw std::invalid_argument("sphere centre must have 2 or 3 coordinates");
  if (!(radius >= 0.0)) throw std::invalid_argument("sphere radius must be non-negative");
  ImplicitSurface s;
  s.dimension_ = center.size();
  s.center_ = center;
  s.radius_ = radius;
  s.field_ = [center, radius](std::span<const double> x) {
    double d2 = 0.0;
    for (std::size_t k = 0; k < center.size(); ++k) d2 += (x[k] - center[k]) * (x[k] - center[k]);
    return d2 - radius * radius;
  };
  return s;
}

ImplicitSurface ImplicitSurface::from_field(std::size_t dimension, Field field, double tolerance) {
  if (dimension != 2 && dimension != 3) throw std::invalid_argument("dimension must be 2 or 3");
  ImplicitSurface s;
  s.dimension_ = dimension;
  s.field_ = std::move(field);
  s.tolerance_ = tolerance;
  return s;
}

Box ImplicitSurface::bounds(double margin) const {
  Box b;
  for (double c : center_) {
    b.lo.push_back(c - radius() - margin);
    b.hi.push_back(c + radius() + margin);
  }
  return b;
}

namespace {

bool exact_hit(const ImplicitSurface& s, std::span<const double> lo, std::span<const double> hi) {
  double near2 = 0.0, far2 = 0.0;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    double c = s.center()[k];
    double nearest = std::clamp(c, lo[k], hi[k]) - c;
    near2 += nearest * nearest;
    far2 += std::max((lo[k] - c) * (lo[k] - c), (hi[k] - c) * (hi[k] - c));
  }
  double r2 = s.radius() * s.radius();
  return near2 <= r2 && r2 <= far2;
}

bool sampled_hit(const ImplicitSurface& s, std::span<const double> lo, std::span<const double> hi) {
  const std::size_t n = lo.size();
  bool negative = false, positive = false;
  std::vector<double> corner(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    for (std::size_t k = 0; k < n; ++k) corner[k] = (mask >> k) & 1 ? hi[k] : lo[k];
    double f = s(corner);
    if (std::abs(f) <= s.tolerance()) return true;
    (f < 0 ? negative : positive) = true;
  }
  return negative && positive;
}

}  // namespace

Voxelization voxelize(const ImplicitSurface& surface, const Box& bounds, double edge_length) {
  if (!(edge_length > 0.0)) throw std::invalid_argument("edge length must be positive");
  const std::size_t n = surface.dimension();
  if (bounds.lo.size() != n || bounds.hi.size() != n)
    throw std::invalid_argument("bounds dimension does not match the surface");
  CubeIndex first(n), last(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (bounds.hi[k] < bounds.lo[k]) throw std::invalid_argument("bounds have hi < lo");
    first[k] = static_cast<std::int64_t>(std::floor(bounds.lo[k] / edge_length));
    last[k] = std::max(first[k], static_cast<std::int64_t>(std::ceil(bounds.hi[k] / edge_length)) - 1);
  }

  Voxelization out;
  out.model.dimension = n;
  out.model.edge_length = edge_length;
  bool touches = false;
  CubeIndex index = first;
  std::vector<double> lo(n), hi(n);
  while (true) {
    for (std::size_t k = 0; k < n; ++k) {
      lo[k] = static_cast<double>(index[k]) * edge_length;
      hi[k] = static_cast<double>(index[k] + 1) * edge_length;
    }
    if (surface.exact() ? exact_hit(surface, lo, hi) : sampled_hit(surface, lo, hi)) {
      out.model.cubes.push_back(index);
      for (std::size_t k = 0; k < n; ++k) touches |= index[k] == first[k] || index[k] == last[k];
    }
    std::size_t k = 0;
    while (k < n && index[k] == last[k]) index[k] = first[k], ++k;
    if (k == n) break;
    ++index[k];
  }
  std::sort(out.model.cubes.begin(), out.model.cubes.end());
  if (touches)
    out.warnings.push_back("cubical model touches the boundary of the bounds; the zero set may extend past them");
  if (out.model.cubes.empty()) out.warnings.push_back("no cube inside the bounds meets the zero set");
  return out;
}

std::string cube_label(const CubeIndex& index) {
  std::string s = "(";
  for (std::size_t k = 0; k < index.size(); ++k) s += (k ? "," : "") + std::to_string(index[k]);
  return s + ")";
}

Graph intersection_graph(const CubicalModel& model) {
  std::set<CubeIndex> cubes(model.cubes.begin(), model.cubes.end());
  std::vector<VertexLabel> labels;
  std::vector<Edge> edges;
  const std::size_t n = model.dimension;
  std::size_t offsets = 1;
  for (std::size_t k = 0; k < n; ++k) offsets *= 3;
  for (const auto& c : cubes) {
    labels.push_back(cube_label(c));
    for (std::size_t code = 0; code < offsets; ++code) {
      CubeIndex other = c;
      std::size_t rest = code;
      for (std::size_t k = 0; k < n; ++k, rest /= 3) other[k] += static_cast<std::int64_t>(rest % 3) - 1;
      // Each pair once, from its smaller end.
      if (other > c && cubes.contains(other)) edges.emplace_back(cube_label(c), cube_label(other));
    }
  }
  return Graph(std::move(labels), edges);
}

Graph minimal_digital_sphere(std::size_t n) {
  Graph sphere;
  for (std::size_t k = 0; k <= n; ++k) {
    Graph pair({std::to_string(k) + "-", std::to_string(k) + "+"}, {});
    sphere = join(sphere, pair);
  }
  return sphere;
}

}  // namespace dtopo
