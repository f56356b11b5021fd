#include "polycentre/spaces.hpp"

#include <algorithm>

#include "polycentre/errors.hpp"

namespace polycentre {

Polytope standard_simplex(int n) {
  if (n < 1) throw InvalidConstruction("standard_simplex: n must be >= 1");
  std::vector<Vector> vertices;
  vertices.reserve(n);
  for (int i = 0; i < n; ++i) vertices.push_back(Vector::unit(n, i));
  return Polytope(std::move(vertices));
}

Polytope cross_polytope(int n) {
  if (n < 1) throw InvalidConstruction("cross_polytope: n must be >= 1");
  std::vector<Vector> vertices;
  vertices.reserve(2 * n);
  for (int i = 0; i < n; ++i) vertices.push_back(Vector::unit(n, i));
  for (int i = 0; i < n; ++i) vertices.push_back(-Vector::unit(n, i));
  return Polytope(std::move(vertices));
}

Polytope hypercube(int n) {
  if (n < 1) throw InvalidConstruction("hypercube: n must be >= 1");
  std::vector<Vector> vertices;
  vertices.reserve(std::size_t(1) << n);
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    Vector v = Vector::zero(n);
    for (int c = 0; c < n; ++c) {
      const bool negative = (mask >> (n - 1 - c)) & 1;
      v[c] = negative ? -1 : 1;
    }
    vertices.push_back(std::move(v));
  }
  return Polytope(std::move(vertices));
}

Polytope symmetric_polytope(const Vector& b0, std::span<const Vector> arms) {
  std::vector<Vector> vertices;
  vertices.reserve(2 * arms.size());
  for (const auto& w : arms) {
    if (is_zero(w)) throw InvalidConstruction("symmetric_polytope: zero arm");
    vertices.push_back(b0 + w);
    vertices.push_back(b0 - w);
  }
  // Mirrored arms collide; keep first occurrences.
  std::vector<Vector> unique;
  for (auto& v : vertices) {
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) {
      unique.push_back(std::move(v));
    }
  }
  return Polytope(std::move(unique));
}

}  // namespace polycentre
