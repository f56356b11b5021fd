#include "polycentre/polytope.hpp"

#include <string>

#include "polycentre/errors.hpp"
#include "polycentre/lp.hpp"

namespace polycentre {

Polytope::Polytope(std::vector<Vector> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw InvalidConstruction("polytope needs at least one vertex");
  }
  dim_ = vertices_.front().dim();
  if (dim_ <= 0) throw InvalidConstruction("polytope vertices must have dim >= 1");
  for (const auto& v : vertices_) {
    if (v.dim() != dim_) {
      throw InvalidConstruction("polytope vertices of mixed dimension");
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      if (vertices_[i] == vertices_[j]) {
        throw InvalidConstruction("duplicate vertex at positions " +
                                  std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

std::vector<int> Polytope::extreme_vertex_indices() const {
  std::vector<int> extreme;
  const int count = static_cast<int>(vertices_.size());
  for (int i = 0; i < count; ++i) {
    std::vector<Vector> others;
    others.reserve(count - 1);
    for (int j = 0; j < count; ++j) {
      if (j != i) others.push_back(vertices_[j]);
    }
    if (others.empty() || !hull_contains(others, vertices_[i])) {
      extreme.push_back(i);
    }
  }
  return extreme;
}

bool hull_contains(std::span<const Vector> points, const Vector& x) {
  const int dim = x.dim();
  const int count = static_cast<int>(points.size());
  LpBuilder lp;
  lp.add_vars(count);
  for (int coord = 0; coord < dim; ++coord) {
    std::vector<Rational> row(count);
    for (int j = 0; j < count; ++j) {
      if (points[j].dim() != dim) {
        throw DimensionMismatch("hull_contains: point/vertex dims differ");
      }
      row[j] = points[j][coord];
    }
    lp.add_constraint(std::move(row), Sense::Eq, x[coord]);
  }
  lp.add_constraint(std::vector<Rational>(count, Rational(1)), Sense::Eq, Rational(1));
  return lp.feasible().optimal();
}

bool contains(const Polytope& p, const Vector& x) {
  if (x.dim() != p.dim()) {
    throw DimensionMismatch("contains: point dim != polytope dim");
  }
  return hull_contains(p.vertices(), x);
}

Polytope translate(const Polytope& p, const Vector& offset) {
  std::vector<Vector> shifted;
  shifted.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) shifted.push_back(v - offset);
  return Polytope(std::move(shifted));
}

}  // namespace polycentre
