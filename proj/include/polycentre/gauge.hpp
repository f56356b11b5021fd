#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polycentre/polytope.hpp"

namespace polycentre {

/// Minkowski gauge value r(x) together with the lead point of the ray
/// through x when x != 0 (lead = x / r, the unique gauge-1 point with
/// x = r * lead).
struct GaugeResult {
  Rational r;
  std::optional<Vector> lead;
};

/// Gauge against the convex hull of an arbitrary generator list:
/// r = min { sum mu_j : sum mu_j g_j = x, mu >= 0 }, solved exactly.
/// Works for generator sets that are flat in the ambient space (the V0
/// balls of base normed spaces). Throws SpanError when x is not reachable.
GaugeResult gauge_over(std::span<const Vector> generators, const Vector& x);

/// Gauge of an absolutely convex full-dimensional ball polytope.
GaugeResult gauge(const Polytope& ball, const Vector& x);

/// x is a lead point of the ball iff its gauge is exactly 1.
bool is_lead_point(const Polytope& ball, const Vector& x);

/// Executable form of the claim that Lead sets are closed under negation:
/// requires x in Lead(ball) and reports is_lead_point(ball, -x).
bool lead_negation_closed(const Polytope& ball, const Vector& x);

/// Supporting functionals of the ball at a lead point x0: the polyhedron
/// F = { f : f(x0) = 1 and |f(v)| <= 1 for every ball vertex v }, probed by
/// 2*dim coordinate-range LPs.
struct SmoothnessReport {
  Vector point;
  bool unique;
  std::vector<Covector> witnesses;  // one if unique, two distinct otherwise
};

SmoothnessReport supporting_functionals(const Polytope& ball, const Vector& x0);

struct PropertySResult {
  bool satisfied;
  std::optional<SmoothnessReport> witness;  // non-smooth lead point when refuted
};

struct StrictConvexityResult {
  bool strictly_convex;
  // Two distinct gauge-1 points whose midpoint also has gauge 1.
  std::optional<std::pair<Vector, Vector>> witness;
};

/// Decides strict convexity of the gauge whose unit ball is the hull of the
/// generators: scans pairs of gauge-1 generators for a gauge-1 midpoint.
/// Complete for polytope balls, since any sphere segment extends to a face
/// whose own extreme generators form such a pair.
StrictConvexityResult strictly_convex_generators(std::span<const Vector> generators);

/// Norm descriptor: l1 / l2 / linf or the gauge of an absolutely convex
/// polytope. Everything except l2 evaluates exactly.
class NormOracle {
 public:
  enum class Kind { L1, L2, Linf, PolyGauge };

  static NormOracle l1(int dim);
  static NormOracle l2(int dim);
  static NormOracle linf(int dim);
  /// Validates absolute convexity: vertex set closed under negation as a
  /// set, and full-dimensional (which puts 0 in the interior).
  static NormOracle poly_gauge(Polytope ball);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool polyhedral() const { return kind_ != Kind::L2; }

  /// Canonical unit-ball polytope (cross-polytope for l1, hypercube for
  /// linf, the given ball for polygauge). Throws for l2.
  const Polytope& ball() const;

  /// Exact value for polyhedral kinds; throws PreconditionViolation for l2.
  Rational eval_exact(const Vector& x) const;

  /// Numeric value for any kind (sqrt for l2).
  double eval_approx(const Vector& x) const;

  /// Exact comparison ||x|| <= bound for every kind; l2 goes through the
  /// squared form bound >= 0 and sum x_i^2 <= bound^2.
  bool le(const Vector& x, const Rational& bound) const;

  /// Sum of squared coordinates (the exact handle on the l2 norm).
  static Rational sq_l2(const Vector& x);

 private:
  NormOracle(Kind k, int dim, std::shared_ptr<const Polytope> ball)
      : kind_(k), dim_(dim), ball_(std::move(ball)) {}

  Kind kind_;
  int dim_;
  std::shared_ptr<const Polytope> ball_;  // null for l2
};

/// Norm value as produced for reports: exact rational when the oracle is
/// polyhedral, double otherwise.
struct NormValue {
  bool exact;
  Rational rat;    // valid iff exact
  double approx;   // always set
};

NormValue norm_eval(const NormOracle& oracle, const Vector& x);

/// Property (S): every lead point of the ball admits at most one norming
/// functional. Polytope balls of dim >= 2 always refute it at some extreme
/// vertex; the scan returns that witness.
PropertySResult satisfies_property_s(const NormOracle& oracle);

/// Strict convexity of the unit sphere. l2 is strictly convex; dim <= 1 is
/// trivially so; polyhedral balls of dim >= 2 never are, and the witness
/// pair is returned.
StrictConvexityResult is_strictly_convex(const NormOracle& oracle);

std::string kind_name(NormOracle::Kind kind);

}  // namespace polycentre
