#pragma once

#include <span>
#include <vector>

#include "polycentre/linalg.hpp"

namespace polycentre {

/// V-representation convex set: the convex hull of a nonempty vertex list.
/// Doubles as unit ball, base and state space throughout the library.
class Polytope {
 public:
  /// Throws InvalidConstruction on an empty list, mixed dimensions or
  /// duplicate vertices. The list need not be minimal (non-extreme points
  /// are allowed); extreme_vertices() recovers the minimal set.
  explicit Polytope(std::vector<Vector> vertices);

  int dim() const { return dim_; }
  const std::vector<Vector>& vertices() const { return vertices_; }

  /// Indices of the vertices that are extreme points (not in the hull of
  /// the others), decided by exact LP.
  std::vector<int> extreme_vertex_indices() const;

  bool operator==(const Polytope&) const = default;

 private:
  std::vector<Vector> vertices_;
  int dim_;
};

/// Exact membership: x in co(vertices), decided by LP feasibility over
/// convex weights.
bool contains(const Polytope& p, const Vector& x);

/// Membership in the convex hull of an arbitrary point list (same LP).
bool hull_contains(std::span<const Vector> points, const Vector& x);

/// Polytope translated by -offset (vertex-wise).
Polytope translate(const Polytope& p, const Vector& offset);

}  // namespace polycentre
