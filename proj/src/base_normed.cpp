#include "polycentre/base_normed.hpp"

#include "polycentre/errors.hpp"
#include "polycentre/lp.hpp"
#include "polycentre/sampling.hpp"

namespace polycentre {

BaseNormedSpace::BaseNormedSpace(Polytope base, Covector e,
                                 std::optional<Vector> centre)
    : base_(std::move(base)), e_(std::move(e)), centre_(std::move(centre)) {
  if (e_.dim() != base_.dim()) {
    throw InvalidConstruction("base normed space: e dim != base dim");
  }
  for (const auto& v : base_.vertices()) {
    if (dot(e_, v) != 1) {
      throw InvalidConstruction(
          "base normed space: e must be exactly 1 on every base vertex");
    }
  }
  if (centre_) {
    if (!verify_centre(base_, *centre_)) {
      throw InvalidConstruction("base normed space: supplied centre fails "
                                "the reflection test");
    }
    v0_generators_.reserve(base_.vertices().size());
    for (const auto& v : base_.vertices()) v0_generators_.push_back(v - *centre_);
  }
}

BaseNormedSpace BaseNormedSpace::from_adjoined(const AdjoinedSpace& s) {
  Polytope base = adjoined_base_polytope(s);
  Covector e = Covector::unit(s.base_dim() + 1, s.base_dim());
  Vector b0 = Vector::zero(s.base_dim() + 1);
  b0[s.base_dim()] = 1;
  return BaseNormedSpace(std::move(base), std::move(e), std::move(b0));
}

const Vector& BaseNormedSpace::centre() const {
  if (!centre_) throw PreconditionViolation("space has no verified centre");
  return *centre_;
}

const std::vector<Vector>& BaseNormedSpace::v0_generators() const {
  if (!centre_) throw PreconditionViolation("space has no verified centre");
  return v0_generators_;
}

GaugeResult BaseNormedSpace::v0_gauge(const Vector& u) const {
  return gauge_over(v0_generators(), u);
}

bool BaseNormedSpace::is_k_point(const Vector& k) const {
  return e_value(k) == 1 && v0_gauge(k - centre()).r == 1;
}

bool BaseNormedSpace::cone_member_via_centre(const Vector& v) const {
  const Rational weight = e_value(v);
  if (weight < 0) return false;
  return v0_gauge(v - weight * centre()).r <= weight;
}

bool BaseNormedSpace::cone_member_generators(const Vector& v) const {
  const auto& vertices = base_.vertices();
  const int k = static_cast<int>(vertices.size());
  LpBuilder lp;
  lp.add_vars(k);
  for (int c = 0; c < base_.dim(); ++c) {
    std::vector<Rational> row(k);
    for (int j = 0; j < k; ++j) row[j] = vertices[j][c];
    lp.add_constraint(std::move(row), Sense::Eq, v[c]);
  }
  return lp.feasible().optimal();
}

bool BaseNormedSpace::base_member_via_centre(const Vector& v) const {
  return e_value(v) == 1 && v0_gauge(v - centre()).r <= 1;
}

Rational BaseNormedSpace::base_norm_lp(const Vector& v) const {
  const auto& vertices = base_.vertices();
  const int k = static_cast<int>(vertices.size());
  LpBuilder lp;
  lp.add_vars(2 * k);
  for (int c = 0; c < base_.dim(); ++c) {
    std::vector<Rational> row(2 * k);
    for (int j = 0; j < k; ++j) {
      row[j] = vertices[j][c];
      row[k + j] = -vertices[j][c];
    }
    lp.add_constraint(std::move(row), Sense::Eq, v[c]);
  }
  const auto outcome = lp.minimize(std::vector<Rational>(2 * k, Rational(1)));
  if (!outcome.optimal()) {
    throw SpanError("base_norm_lp: v lies outside the span of the cone");
  }
  return outcome.value;
}

Rational BaseNormedSpace::norm_via_b4(const Vector& v) const {
  const Rational weight = e_value(v);
  const Rational radial = v0_gauge(v - weight * centre()).r;
  return std::max(radial, rational_abs(weight));
}

KDecomposeOutcome k_decompose(const BaseNormedSpace& s, const Vector& v) {
  const Rational weight = s.e_value(v);
  const Vector u = v - weight * s.centre();
  if (is_zero(u)) {
    return {std::nullopt, weight};
  }
  const GaugeResult g = s.v0_gauge(u);
  const Vector& direction = *g.lead;
  Vector k = direction + s.centre();
  Vector k_prime = -direction + s.centre();
  Rational alpha = (weight + g.r) / 2;
  Rational beta = (weight - g.r) / 2;
  // |alpha| >= |beta| normalization: interchange the roles when e(v) < 0.
  if (weight < 0) {
    std::swap(k, k_prime);
    std::swap(alpha, beta);
  }
  return {KDecomposition{std::move(k), std::move(k_prime), std::move(alpha),
                         std::move(beta)},
          std::nullopt};
}

Vector abs_value(const BaseNormedSpace& s, const Vector& v) {
  const KDecomposeOutcome outcome = k_decompose(s, v);
  if (outcome.is_centre_multiple()) {
    return rational_abs(*outcome.centre_multiple) * s.centre();
  }
  const KDecomposition& d = *outcome.decomposition;
  return rational_abs(d.alpha) * d.k + rational_abs(d.beta) * d.k_prime;
}

namespace {

Vector reconstruct(const KDecomposition& d) {
  return d.alpha * d.k + d.beta * d.k_prime;
}

// A random K point: a random nonzero direction in the e-kernel, normalized
// by the V0 gauge and shifted to the base.
Vector random_k_point(Rng& rng, const BaseNormedSpace& s) {
  const auto& gens = s.v0_generators();
  for (;;) {
    // Random signed combination of the generators stays in the e-kernel.
    Vector u = Vector::zero(s.ambient_dim());
    for (const auto& g : gens) {
      u = u + random_rational(rng, 8, 8) * g;
    }
    if (is_zero(u)) continue;
    return *s.v0_gauge(u).lead + s.centre();
  }
}

// Random element of span(cone): signed combination of base vertices.
Vector random_span_element(Rng& rng, const BaseNormedSpace& s) {
  Vector v = Vector::zero(s.ambient_dim());
  for (const auto& b : s.base().vertices()) {
    v = v + random_rational(rng, 16, 8) * b;
  }
  return v;
}

bool abs_identity_holds(const BaseNormedSpace& s, const Vector& a,
                        const Vector& b) {
  // |a - b| == a + b.
  return abs_value(s, a - b) == a + b;
}

AxiomCheck check_axiom1(const BaseNormedSpace& s, Rng& rng, int samples) {
  AxiomCheck check;
  for (int i = 0; i < samples; ++i) {
    const Vector b = random_hull_point(rng, s.base());
    const Vector v = random_positive_rational(rng) * b;
    if (abs_value(s, v) != v) {
      return {false, "|v| != v on a cone element", {v}};
    }
  }
  return check;
}

AxiomCheck check_axiom2(const BaseNormedSpace& s, Rng& rng, int samples) {
  AxiomCheck check;
  for (int i = 0; i < samples; ++i) {
    const Vector v = random_span_element(rng, s);
    const Vector a = abs_value(s, v);
    if (!s.cone_member_via_centre(a + v) || !s.cone_member_via_centre(a - v)) {
      return {false, "|v| +- v left the cone", {v}};
    }
  }
  return check;
}

AxiomCheck check_axiom3(const BaseNormedSpace& s, Rng& rng, int samples) {
  AxiomCheck check;
  for (int i = 0; i < samples; ++i) {
    const Vector v = random_span_element(rng, s);
    const Rational scale = random_rational(rng, 8, 8);
    if (abs_value(s, scale * v) != rational_abs(scale) * abs_value(s, v)) {
      return {false, "|k v| != |k| |v|", {v}};
    }
  }
  return check;
}

AxiomCheck check_axiom4(const BaseNormedSpace& s, Rng& rng, int samples) {
  AxiomCheck check;
  for (int i = 0; i < samples; ++i) {
    // Triples with |u - v| = u + v and |u - w| = u + w are exactly
    // u = alpha k, v = beta k', w = gamma k' for positive scalars.
    const Vector k = random_k_point(rng, s);
    const Vector k_prime = Rational(2) * s.centre() - k;
    const Vector u = random_positive_rational(rng, 8, 8) * k;
    const Vector v = random_positive_rational(rng, 8, 8) * k_prime;
    const Vector w = random_positive_rational(rng, 8, 8) * k_prime;
    if (!abs_identity_holds(s, u, v) || !abs_identity_holds(s, u, w)) {
      return {false, "constructed triple failed its own hypothesis", {u, v, w}};
    }
    const Vector sum = abs_value(s, v + w);
    const Vector diff = abs_value(s, v - w);
    if (!abs_identity_holds(s, u, sum) || !abs_identity_holds(s, u, diff)) {
      return {false, "axiom (4) conclusion failed", {u, v, w}};
    }
  }
  return check;
}

AxiomCheck check_axiom5(const BaseNormedSpace& s, Rng& rng, int samples) {
  // Constructive side first: on a flat face of the V0 ball the axiom fails,
  // with the witness triple of the strict-convexity equivalence proof.
  const StrictConvexityResult strict = v0_strictly_convex(s);
  if (!strict.strictly_convex) {
    const auto& [y, z] = *strict.witness;
    const Rational half(1, 2);
    const Vector x0 = half * (y + z);
    const Vector u = s.centre() - x0;
    const Vector v = x0 + s.centre();
    const Vector w = half * (y + s.centre());
    AxiomCheck check;
    check.pass = abs_identity_holds(s, u, w);
    check.witness = {u, v, w};
    if (!check.pass) {
      check.note =
          "0 <= w <= v with |u - v| = u + v, yet |u - w| != u + w (flat face)";
      return check;
    }
    check.note = "constructed flat-face triple unexpectedly satisfied axiom (5)";
    return check;
  }

  // Strictly convex V0: sample order-interval members below v.
  for (int i = 0; i < samples; ++i) {
    const Vector k = random_k_point(rng, s);
    const Vector k_prime = Rational(2) * s.centre() - k;
    const Vector u = random_positive_rational(rng, 8, 8) * k;
    const Vector v = random_positive_rational(rng, 8, 8) * k_prime;
    std::vector<Vector> candidates;
    candidates.push_back(random_unit_rational(rng, 8) * v);
    const Vector probe =
        random_unit_rational(rng, 8) * random_hull_point(rng, s.base());
    if (s.cone_member_via_centre(v - probe)) candidates.push_back(probe);
    for (const auto& w : candidates) {
      if (is_zero(w)) continue;
      if (!abs_identity_holds(s, u, w)) {
        return {false, "axiom (5) failed on a strictly convex space", {u, v, w}};
      }
    }
  }
  return {};
}

}  // namespace

AxiomReport check_abs_axioms(const BaseNormedSpace& s, int samples,
                             std::uint64_t seed) {
  Rng rng(seed);
  AxiomReport report;
  report.samples = samples;
  report.seed = seed;
  report.axiom[0] = check_axiom1(s, rng, samples);
  report.axiom[1] = check_axiom2(s, rng, samples);
  report.axiom[2] = check_axiom3(s, rng, samples);
  report.axiom[3] = check_axiom4(s, rng, samples);
  report.axiom[4] = check_axiom5(s, rng, samples);
  return report;
}

StrictConvexityResult v0_strictly_convex(const BaseNormedSpace& s) {
  return strictly_convex_generators(s.v0_generators());
}

ExtKResult ext_equals_k(const BaseNormedSpace& s) {
  // ext(B) c= K: every extreme point of the base (redundancy LP) must sit
  // at V0 distance exactly 1 from the centre.
  for (int index : s.base().extreme_vertex_indices()) {
    const Vector& vertex = s.base().vertices()[index];
    if (!s.is_k_point(vertex)) return {false, vertex};
  }
  const StrictConvexityResult strict = v0_strictly_convex(s);
  if (strict.strictly_convex) return {true, std::nullopt};
  const auto& [x, y] = *strict.witness;
  const Rational half(1, 2);
  // The midpoint keeps gauge 1, so it lies in K, yet it is a proper convex
  // combination of two base points: K != ext(B).
  return {false, half * (x + y) + s.centre()};
}

}  // namespace polycentre
