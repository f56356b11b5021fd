#include "polycentre/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polycentre/errors.hpp"
#include "polycentre/lp.hpp"
#include "polycentre/spaces.hpp"

namespace polycentre {

GaugeResult gauge_over(std::span<const Vector> generators, const Vector& x) {
  if (generators.empty()) throw PreconditionViolation("gauge_over: no generators");
  const int dim = x.dim();
  const int count = static_cast<int>(generators.size());

  LpBuilder lp;
  lp.add_vars(count);
  for (int coord = 0; coord < dim; ++coord) {
    std::vector<Rational> row(count);
    for (int j = 0; j < count; ++j) {
      if (generators[j].dim() != dim) {
        throw DimensionMismatch("gauge_over: generator dim != point dim");
      }
      row[j] = generators[j][coord];
    }
    lp.add_constraint(std::move(row), Sense::Eq, x[coord]);
  }
  const auto outcome = lp.minimize(std::vector<Rational>(count, Rational(1)));
  if (!outcome.optimal()) {
    throw SpanError("gauge_over: point outside the cone of the generators");
  }

  GaugeResult result{outcome.value, std::nullopt};
  if (result.r > 0) result.lead = (1 / result.r) * x;
  return result;
}

GaugeResult gauge(const Polytope& ball, const Vector& x) {
  if (x.dim() != ball.dim()) {
    throw DimensionMismatch("gauge: point dim != ball dim");
  }
  return gauge_over(ball.vertices(), x);
}

bool is_lead_point(const Polytope& ball, const Vector& x) {
  return gauge(ball, x).r == 1;
}

bool lead_negation_closed(const Polytope& ball, const Vector& x) {
  if (!is_lead_point(ball, x)) {
    throw PreconditionViolation("lead_negation_closed: x is not a lead point");
  }
  return is_lead_point(ball, -x);
}

SmoothnessReport supporting_functionals(const Polytope& ball, const Vector& x0) {
  if (gauge(ball, x0).r != 1) {
    throw PreconditionViolation("supporting_functionals: x0 is not a lead point");
  }
  const int dim = ball.dim();

  LpBuilder lp;
  lp.add_vars(dim, VarSign::Free);
  {
    std::vector<Rational> row(x0.coords.begin(), x0.coords.end());
    lp.add_constraint(std::move(row), Sense::Eq, Rational(1));
  }
  for (const auto& v : ball.vertices()) {
    std::vector<Rational> row(v.coords.begin(), v.coords.end());
    lp.add_constraint(row, Sense::Le, Rational(1));
    lp.add_constraint(std::move(row), Sense::Ge, Rational(-1));
  }

  SmoothnessReport report{x0, true, {}};
  std::optional<Covector> low_witness;
  std::optional<Covector> high_witness;
  Covector first_optimum;
  for (int coord = 0; coord < dim; ++coord) {
    std::vector<Rational> objective(dim, Rational(0));
    objective[coord] = 1;
    const auto hi = lp.maximize(objective);
    const auto lo = lp.minimize(std::move(objective));
    if (!hi.optimal() || !lo.optimal()) {
      throw std::logic_error("supporting functional polyhedron must be nonempty and bounded");
    }
    if (coord == 0) first_optimum = Covector(hi.assignment);
    if (hi.value != lo.value) {
      report.unique = false;
      high_witness = Covector(hi.assignment);
      low_witness = Covector(lo.assignment);
      break;
    }
  }
  if (report.unique) {
    report.witnesses.push_back(std::move(first_optimum));
  } else {
    report.witnesses.push_back(std::move(*high_witness));
    report.witnesses.push_back(std::move(*low_witness));
  }
  return report;
}

StrictConvexityResult strictly_convex_generators(std::span<const Vector> generators) {
  std::vector<int> on_sphere;
  for (int i = 0; i < static_cast<int>(generators.size()); ++i) {
    if (gauge_over(generators, generators[i]).r == 1) on_sphere.push_back(i);
  }
  const Rational half(1, 2);
  for (std::size_t a = 0; a < on_sphere.size(); ++a) {
    for (std::size_t b = a + 1; b < on_sphere.size(); ++b) {
      const Vector& x = generators[on_sphere[a]];
      const Vector& y = generators[on_sphere[b]];
      const Vector midpoint = half * (x + y);
      if (gauge_over(generators, midpoint).r == 1) {
        return {false, std::make_pair(x, y)};
      }
    }
  }
  return {true, std::nullopt};
}

NormOracle NormOracle::l1(int dim) {
  return NormOracle(Kind::L1, dim, std::make_shared<Polytope>(cross_polytope(dim)));
}

NormOracle NormOracle::l2(int dim) { return NormOracle(Kind::L2, dim, nullptr); }

NormOracle NormOracle::linf(int dim) {
  return NormOracle(Kind::Linf, dim, std::make_shared<Polytope>(hypercube(dim)));
}

NormOracle NormOracle::poly_gauge(Polytope ball) {
  const auto& vertices = ball.vertices();
  for (const auto& v : vertices) {
    const Vector negated = -v;
    if (std::find(vertices.begin(), vertices.end(), negated) == vertices.end()) {
      throw InvalidConstruction(
          "poly_gauge ball is not absolutely convex: vertex set not closed "
          "under negation");
    }
  }
  if (rank(vertices) != ball.dim()) {
    throw InvalidConstruction(
        "poly_gauge ball is not full-dimensional: 0 is not interior, the "
        "gauge would not be finite");
  }
  const int dim = ball.dim();
  return NormOracle(Kind::PolyGauge, dim, std::make_shared<Polytope>(std::move(ball)));
}

const Polytope& NormOracle::ball() const {
  if (!ball_) throw PreconditionViolation("l2 oracle has no polytope ball");
  return *ball_;
}

Rational NormOracle::eval_exact(const Vector& x) const {
  if (x.dim() != dim_) throw DimensionMismatch("norm eval: dim mismatch");
  switch (kind_) {
    case Kind::L1: {
      Rational sum(0);
      for (const auto& c : x.coords) sum += rational_abs(c);
      return sum;
    }
    case Kind::Linf: {
      Rational best(0);
      for (const auto& c : x.coords) best = std::max(best, rational_abs(c));
      return best;
    }
    case Kind::PolyGauge:
      return gauge(*ball_, x).r;
    case Kind::L2:
      throw PreconditionViolation("l2 norm has no exact rational value");
  }
  throw std::logic_error("unreachable");
}

Rational NormOracle::sq_l2(const Vector& x) {
  Rational sum(0);
  for (const auto& c : x.coords) sum += c * c;
  return sum;
}

double NormOracle::eval_approx(const Vector& x) const {
  if (kind_ == Kind::L2) {
    if (x.dim() != dim_) throw DimensionMismatch("norm eval: dim mismatch");
    return std::sqrt(sq_l2(x).get_d());
  }
  return eval_exact(x).get_d();
}

bool NormOracle::le(const Vector& x, const Rational& bound) const {
  if (kind_ == Kind::L2) {
    if (x.dim() != dim_) throw DimensionMismatch("norm le: dim mismatch");
    return bound >= 0 && sq_l2(x) <= bound * bound;
  }
  return eval_exact(x) <= bound;
}

NormValue norm_eval(const NormOracle& oracle, const Vector& x) {
  if (oracle.polyhedral()) {
    Rational value = oracle.eval_exact(x);
    const double approx = value.get_d();
    return {true, std::move(value), approx};
  }
  if (is_zero(x)) return {true, Rational(0), 0.0};
  return {false, Rational(0), oracle.eval_approx(x)};
}

PropertySResult satisfies_property_s(const NormOracle& oracle) {
  if (oracle.kind() == NormOracle::Kind::L2) return {true, std::nullopt};
  if (oracle.dim() <= 1) return {true, std::nullopt};
  // A polytope ball of dim >= 2 always has a vertex with at least two
  // supporting functionals; the extreme-vertex scan locates one.
  const Polytope& ball = oracle.ball();
  for (int index : ball.extreme_vertex_indices()) {
    SmoothnessReport report = supporting_functionals(ball, ball.vertices()[index]);
    if (!report.unique) return {false, std::move(report)};
  }
  throw std::logic_error(
      "polytope ball of dim >= 2 with only smooth vertices cannot occur");
}

StrictConvexityResult is_strictly_convex(const NormOracle& oracle) {
  if (oracle.kind() == NormOracle::Kind::L2) return {true, std::nullopt};
  if (oracle.dim() <= 1) return {true, std::nullopt};
  return strictly_convex_generators(oracle.ball().vertices());
}

std::string kind_name(NormOracle::Kind kind) {
  switch (kind) {
    case NormOracle::Kind::L1: return "l1";
    case NormOracle::Kind::L2: return "l2";
    case NormOracle::Kind::Linf: return "linf";
    case NormOracle::Kind::PolyGauge: return "polygauge";
  }
  return "unknown";
}

}  // namespace polycentre
