#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtopo/graph.hpp"

namespace dtopo {

/// Axis-aligned box [lo, hi] in R^n.
struct Box {
  std::vector<double> lo, hi;
};

/// Zero set of a scalar field in R^2 or R^3.
class ImplicitSurface {
 public:
  using Field = std::function<double(std::span<const double>)>;

  /// Circle (2 coordinates) or sphere (3 coordinates). Voxelized with exact box tests.
  static ImplicitSurface sphere(std::vector<double> center, double radius);
  /// Arbitrary field; voxelization samples cube corners and is approximate.
  static ImplicitSurface from_field(std::size_t dimension, Field field, double tolerance = 1e-9);

  std::size_t dimension() const { return dimension_; }
  bool exact() const { return radius_.has_value(); }
  double operator()(std::span<const double> x) const { return field_(x); }
  double tolerance() const { return tolerance_; }
  const std::vector<double>& center() const { return center_; }
  double radius() const { return radius_.value(); }

  /// Bounding box of an exact shape grown by `margin` on every side.
  Box bounds(double margin) const;

 private:
  ImplicitSurface() = default;
  std::size_t dimension_ = 0;
  Field field_;
  double tolerance_ = 0.0;
  std::vector<double> center_;
  std::optional<double> radius_;
};

using CubeIndex = std::vector<std::int64_t>;

/// Cubes of edge length L; cube i covers the product of [i_k L, (i_k + 1) L].
struct CubicalModel {
  std::size_t dimension = 0;
  double edge_length = 1.0;
  /// Sorted, unique.
  std::vector<CubeIndex> cubes;
  friend bool operator==(const CubicalModel&, const CubicalModel&) = default;
};

struct Voxelization {
  CubicalModel model;
  std::vector<std::string> warnings;
};

/**
 * Every grid cube inside `bounds` whose closed box meets the zero set.
 *
 * Exact shapes: a cube is kept iff the nearest and farthest box points
 * bracket the radius (tangency counts). Other fields: kept iff corner signs
 * differ or |f| <= tolerance at some corner. A model that reaches the edge
 * of `bounds` gets a warning, since the zero set may extend past it.
 *
 * Throws std::invalid_argument for L <= 0 or mismatched dimensions.
 */
Voxelization voxelize(const ImplicitSurface& surface, const Box& bounds, double edge_length);

/// "(i,j)" / "(i,j,k)".
std::string cube_label(const CubeIndex& index);

/// One vertex per cube; adjacent iff the closed cubes share a point
/// (Chebyshev distance 1 between indices).
Graph intersection_graph(const CubicalModel& model);

/// Join of n+1 copies of two isolated points, labelled "k-" and "k+".
Graph minimal_digital_sphere(std::size_t n);

}  // namespace dtopo
