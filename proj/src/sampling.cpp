#include "polycentre/sampling.hpp"

#include <stdexcept>

#include "polycentre/spaces.hpp"

namespace polycentre {

Rational random_rational(Rng& rng, long max_num, long max_den) {
  Rational q(rng.range(-max_num, max_num), rng.range(1, max_den));
  q.canonicalize();
  return q;
}

Rational random_positive_rational(Rng& rng, long max_num, long max_den) {
  Rational q(rng.range(1, max_num), rng.range(1, max_den));
  q.canonicalize();
  return q;
}

Rational random_unit_rational(Rng& rng, long max_den) {
  const long den = rng.range(1, max_den);
  Rational q(rng.range(0, den), den);
  q.canonicalize();
  return q;
}

Vector random_vector(Rng& rng, int dim, long max_num, long max_den) {
  Vector v = Vector::zero(dim);
  for (int i = 0; i < dim; ++i) v[i] = random_rational(rng, max_num, max_den);
  return v;
}

Vector random_nonzero_vector(Rng& rng, int dim, long max_num, long max_den) {
  for (;;) {
    Vector v = random_vector(rng, dim, max_num, max_den);
    if (!is_zero(v)) return v;
  }
}

Covector random_covector(Rng& rng, int dim, long max_num, long max_den) {
  Covector f = Covector::zero(dim);
  for (int i = 0; i < dim; ++i) f[i] = random_rational(rng, max_num, max_den);
  return f;
}

Vector random_hull_point(Rng& rng, const Polytope& p) {
  const auto& vertices = p.vertices();
  std::vector<long> weights(vertices.size());
  long total = 0;
  for (auto& w : weights) {
    w = rng.range(0, 64);
    total += w;
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  Vector point = Vector::zero(p.dim());
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (weights[j] == 0) continue;
    Rational w(weights[j], total);
    w.canonicalize();
    point = point + w * vertices[j];
  }
  return point;
}

Polytope random_abs_convex_ball(Rng& rng, int dim, int arm_pairs) {
  if (arm_pairs < dim) {
    throw std::invalid_argument("random_abs_convex_ball: need at least dim arm pairs");
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Vector> arms;
    arms.reserve(arm_pairs);
    for (int i = 0; i < arm_pairs; ++i) {
      arms.push_back(random_nonzero_vector(rng, dim));
    }
    if (rank(arms) != dim) continue;
    // Distinct arms can still collide as +-pairs; symmetric_polytope dedups,
    // so only a drop below 2*arm_pairs vertices signals a collision.
    Polytope ball = symmetric_polytope(Vector::zero(dim), arms);
    if (static_cast<int>(ball.vertices().size()) == 2 * arm_pairs) return ball;
  }
  throw std::runtime_error("random_abs_convex_ball: rank requirement kept failing");
}

}  // namespace polycentre
