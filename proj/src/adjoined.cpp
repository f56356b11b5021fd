#include "polycentre/adjoined.hpp"

#include <algorithm>
#include <cmath>

#include "polycentre/errors.hpp"
#include "polycentre/lp.hpp"

namespace polycentre {

void AdjoinedSpace::check_dims(const AdjoinedElement& x) const {
  if (x.v.dim() != base_dim()) {
    throw DimensionMismatch("adjoined element dim != space dim");
  }
}

bool AdjoinedSpace::cone_member(const AdjoinedElement& x) const {
  check_dims(x);
  return oracle_.le(x.v, x.alpha);
}

NormValue AdjoinedSpace::order_unit_norm(const AdjoinedElement& x) const {
  check_dims(x);
  NormValue base = norm_eval(oracle_, x.v);
  const Rational abs_alpha = rational_abs(x.alpha);
  if (base.exact) {
    Rational value = base.rat + abs_alpha;
    const double approx = value.get_d();
    return {true, std::move(value), approx};
  }
  return {false, Rational(0), base.approx + abs_alpha.get_d()};
}

NormValue AdjoinedSpace::base_norm(const AdjoinedElement& x) const {
  check_dims(x);
  const Rational abs_alpha = rational_abs(x.alpha);
  if (oracle_.polyhedral()) {
    Rational value = std::max(oracle_.eval_exact(x.v), abs_alpha);
    const double approx = value.get_d();
    return {true, std::move(value), approx};
  }
  // l2: exact comparison through squares even though the value is inexact.
  if (oracle_.le(x.v, abs_alpha)) {
    const double approx = abs_alpha.get_d();
    return {true, abs_alpha, approx};
  }
  return {false, Rational(0), oracle_.eval_approx(x.v)};
}

bool AdjoinedSpace::base_member(const AdjoinedElement& x) const {
  check_dims(x);
  return x.alpha == 1 && oracle_.le(x.v, Rational(1));
}

bool AdjoinedSpace::state_member(const Covector& f, const Rational& c) const {
  return c == 1 && dual_norm_le(f, Rational(1));
}

NormValue AdjoinedSpace::dual_norm(const Covector& f) const {
  if (f.dim() != base_dim()) throw DimensionMismatch("dual_norm: dim mismatch");
  if (!oracle_.polyhedral()) {
    // Dual of l2 is l2.
    if (std::all_of(f.coords.begin(), f.coords.end(),
                    [](const Rational& c) { return c == 0; })) {
      return {true, Rational(0), 0.0};
    }
    Rational sq(0);
    for (const auto& c : f.coords) sq += c * c;
    return {false, Rational(0), std::sqrt(sq.get_d())};
  }
  Rational best(0);
  for (const auto& w : oracle_.ball().vertices()) {
    best = std::max(best, rational_abs(dot(f, w)));
  }
  const double approx = best.get_d();
  return {true, std::move(best), approx};
}

bool AdjoinedSpace::dual_norm_le(const Covector& f, const Rational& bound) const {
  if (f.dim() != base_dim()) throw DimensionMismatch("dual_norm: dim mismatch");
  if (!oracle_.polyhedral()) {
    Rational sq(0);
    for (const auto& c : f.coords) sq += c * c;
    return bound >= 0 && sq <= bound * bound;
  }
  for (const auto& w : oracle_.ball().vertices()) {
    if (rational_abs(dot(f, w)) > bound) return false;
  }
  return true;
}

Vector AdjoinedSpace::dual_norm_minimizer(const Covector& f) const {
  const Polytope& ball = oracle_.ball();
  const Vector* best = nullptr;
  Rational best_value(0);
  for (const auto& w : ball.vertices()) {
    const Rational value = dot(f, w);
    if ((best == nullptr || value < best_value) && gauge(ball, w).r == 1) {
      best = &w;
      best_value = value;
    }
  }
  if (best == nullptr) throw std::logic_error("ball has no gauge-1 vertex");
  return *best;
}

Rational order_unit_norm_lp(const AdjoinedSpace& s, const AdjoinedElement& x) {
  if (!s.polyhedral()) {
    throw PreconditionViolation("order_unit_norm_lp needs a polyhedral oracle");
  }
  const auto& vertices = s.oracle().ball().vertices();
  const int k = static_cast<int>(vertices.size());
  const int dim = s.base_dim();

  // Variables: t, mu (witness for t e - x), nu (witness for t e + x).
  LpBuilder lp;
  lp.add_var();          // t
  lp.add_vars(k);        // mu
  lp.add_vars(k);        // nu
  const int width = 1 + 2 * k;

  for (int c = 0; c < dim; ++c) {
    std::vector<Rational> row(width, Rational(0));
    for (int j = 0; j < k; ++j) row[1 + j] = vertices[j][c];
    lp.add_constraint(std::move(row), Sense::Eq, -x.v[c]);
  }
  for (int c = 0; c < dim; ++c) {
    std::vector<Rational> row(width, Rational(0));
    for (int j = 0; j < k; ++j) row[1 + k + j] = vertices[j][c];
    lp.add_constraint(std::move(row), Sense::Eq, x.v[c]);
  }
  {
    std::vector<Rational> row(width, Rational(0));
    row[0] = -1;
    for (int j = 0; j < k; ++j) row[1 + j] = 1;
    lp.add_constraint(std::move(row), Sense::Le, -x.alpha);
  }
  {
    std::vector<Rational> row(width, Rational(0));
    row[0] = -1;
    for (int j = 0; j < k; ++j) row[1 + k + j] = 1;
    lp.add_constraint(std::move(row), Sense::Le, x.alpha);
  }

  std::vector<Rational> objective(width, Rational(0));
  objective[0] = 1;
  const auto outcome = lp.minimize(std::move(objective));
  if (!outcome.optimal()) {
    throw std::logic_error("order-unit norm LP must have an optimum");
  }
  return outcome.value;
}

Rational base_norm_lp(const AdjoinedSpace& s, const AdjoinedElement& x) {
  if (!s.polyhedral()) {
    throw PreconditionViolation("base_norm_lp needs a polyhedral oracle");
  }
  const auto& vertices = s.oracle().ball().vertices();
  const int k = static_cast<int>(vertices.size());
  const int dim = s.base_dim();

  // x = sum lambda_j (w_j, 1) - sum mu_j (w_j, 1); minimize total weight.
  LpBuilder lp;
  lp.add_vars(2 * k);
  for (int c = 0; c < dim; ++c) {
    std::vector<Rational> row(2 * k, Rational(0));
    for (int j = 0; j < k; ++j) {
      row[j] = vertices[j][c];
      row[k + j] = -vertices[j][c];
    }
    lp.add_constraint(std::move(row), Sense::Eq, x.v[c]);
  }
  {
    std::vector<Rational> row(2 * k, Rational(0));
    for (int j = 0; j < k; ++j) {
      row[j] = 1;
      row[k + j] = -1;
    }
    lp.add_constraint(std::move(row), Sense::Eq, x.alpha);
  }
  const auto outcome = lp.minimize(std::vector<Rational>(2 * k, Rational(1)));
  if (!outcome.optimal()) {
    throw std::logic_error("base norm LP must have an optimum");
  }
  return outcome.value;
}

Polytope adjoined_base_polytope(const AdjoinedSpace& s) {
  if (!s.polyhedral()) {
    throw PreconditionViolation("adjoined_base_polytope needs a polyhedral oracle");
  }
  std::vector<Vector> lifted;
  for (const auto& w : s.oracle().ball().vertices()) {
    std::vector<Rational> coords = w.coords;
    coords.push_back(Rational(1));
    lifted.push_back(Vector(std::move(coords)));
  }
  return Polytope(std::move(lifted));
}

AdjoinedElement element_from_coords(const Vector& coords) {
  if (coords.dim() < 2) {
    throw DimensionMismatch("adjoined element needs at least (v_1, alpha)");
  }
  std::vector<Rational> v(coords.coords.begin(), coords.coords.end() - 1);
  return {Vector(std::move(v)), coords.coords.back()};
}

Vector element_to_coords(const AdjoinedElement& x) {
  std::vector<Rational> coords = x.v.coords;
  coords.push_back(x.alpha);
  return Vector(std::move(coords));
}

}  // namespace polycentre
