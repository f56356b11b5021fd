#include "polycentre/centre.hpp"

#include "polycentre/errors.hpp"
#include "polycentre/lp.hpp"

namespace polycentre {

namespace {

// Shared constraint layout for the centre feasibility polyhedron.
// Variables: lambda (|V| convex weights defining b0), then mu_i (|V| convex
// weights per vertex expressing the reflection 2*b0 - v_i as a point of P).
// Eliminating b0 gives, for every vertex i and coordinate c:
//   sum_j mu_ij v_jc - 2 sum_j lambda_j v_jc = -v_ic.
LpBuilder centre_feasibility(const Polytope& p) {
  const auto& vertices = p.vertices();
  const int count = static_cast<int>(vertices.size());
  const int dim = p.dim();

  LpBuilder lp;
  lp.add_vars(count);           // lambda
  lp.add_vars(count * count);   // mu, row-major by vertex

  auto convex_row = [&](int offset) {
    std::vector<Rational> row(count * (count + 1), Rational(0));
    for (int j = 0; j < count; ++j) row[offset + j] = 1;
    return row;
  };
  lp.add_constraint(convex_row(0), Sense::Eq, Rational(1));
  for (int i = 0; i < count; ++i) {
    lp.add_constraint(convex_row(count + i * count), Sense::Eq, Rational(1));
  }

  for (int i = 0; i < count; ++i) {
    for (int c = 0; c < dim; ++c) {
      std::vector<Rational> row(count * (count + 1), Rational(0));
      for (int j = 0; j < count; ++j) {
        row[j] = Rational(-2) * vertices[j][c];
        row[count + i * count + j] = vertices[j][c];
      }
      lp.add_constraint(std::move(row), Sense::Eq, -vertices[i][c]);
    }
  }
  return lp;
}

Vector centre_from_assignment(const Polytope& p,
                              const std::vector<Rational>& assignment) {
  const auto& vertices = p.vertices();
  Vector b0 = Vector::zero(p.dim());
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    b0 = b0 + assignment[j] * vertices[j];
  }
  return b0;
}

Vector barycentre(const Polytope& p) {
  const auto& vertices = p.vertices();
  const Rational weight(1, static_cast<long>(vertices.size()));
  Vector b = Vector::zero(p.dim());
  for (const auto& v : vertices) b = b + weight * v;
  return b;
}

}  // namespace

bool verify_centre(const Polytope& p, const Vector& b0) {
  if (!contains(p, b0)) {
    throw PreconditionViolation("verify_centre: b0 is not a point of P");
  }
  const Rational two(2);
  for (const auto& v : p.vertices()) {
    if (!contains(p, two * b0 - v)) return false;
  }
  return true;
}

CentreResult find_centre(const Polytope& p) {
  const auto outcome = centre_feasibility(p).feasible();
  if (outcome.optimal()) {
    return {centre_from_assignment(p, outcome.assignment), std::nullopt};
  }
  CentreResult result{std::nullopt, std::nullopt};
  for (const auto& v : p.vertices()) {
    if (!vertex_admits_reflection(p, v)) {
      result.witness = v;
      break;
    }
  }
  return result;
}

bool centre_is_unique(const Polytope& p, const Vector& b0) {
  if (!verify_centre(p, b0)) {
    throw PreconditionViolation("centre_is_unique: b0 is not a centre");
  }
  const auto& vertices = p.vertices();
  const int count = static_cast<int>(vertices.size());
  const LpBuilder lp = centre_feasibility(p);

  for (int c = 0; c < p.dim(); ++c) {
    // Coordinate c of the candidate centre as a function of lambda.
    std::vector<Rational> objective(count * (count + 1), Rational(0));
    for (int j = 0; j < count; ++j) objective[j] = vertices[j][c];
    const auto hi = lp.maximize(objective);
    const auto lo = lp.minimize(std::move(objective));
    if (!hi.optimal() || !lo.optimal()) {
      throw std::logic_error("centre polyhedron vanished under probing");
    }
    if (hi.value != lo.value) return false;
  }
  return true;
}

BoundaryDecomposition prop17_decompose(const Polytope& p, const Vector& b0,
                                       const Vector& b) {
  if (!verify_centre(p, b0)) {
    throw PreconditionViolation("prop17_decompose: b0 is not a centre of P");
  }
  if (!contains(p, b)) {
    throw PreconditionViolation("prop17_decompose: b is not a point of P");
  }
  const Vector x = b - b0;
  if (is_zero(x)) {
    throw PreconditionViolation(
        "prop17_decompose: b equals the centre, the decomposition is not "
        "unique there");
  }

  std::vector<Vector> generators;
  generators.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) generators.push_back(v - b0);

  const GaugeResult g = gauge_over(generators, x);
  const Vector& lead = *g.lead;
  const Rational alpha = (1 + g.r) / 2;
  return {lead + b0, -lead + b0, alpha};
}

}  // namespace polycentre
