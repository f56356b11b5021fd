#include "polycentre/batteries.hpp"

#include <algorithm>

#include "polycentre/spaces.hpp"

namespace polycentre::batteries {

namespace {

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

Vector random_span_element(Rng& rng, const BaseNormedSpace& s) {
  Vector v = Vector::zero(s.ambient_dim());
  for (const auto& b : s.base().vertices()) {
    v = v + random_rational(rng, 16, 8) * b;
  }
  return v;
}

AdjoinedElement random_element(Rng& rng, const AdjoinedSpace& s) {
  return {random_vector(rng, s.base_dim(), 16, 8), random_rational(rng, 16, 8)};
}

}  // namespace

AffineFunction random_affine(Rng& rng, int dim, long max_num, long max_den) {
  return {random_covector(rng, dim, max_num, max_den),
          random_rational(rng, max_num, max_den)};
}

Outcome gauge_norm_axioms(const NormOracle& oracle, int samples,
                          std::uint64_t seed) {
  Rng rng(seed);
  if (oracle.eval_exact(Vector::zero(oracle.dim())) != 0) {
    return fail("r(0) != 0");
  }
  for (int i = 0; i < samples; ++i) {
    const Vector x = random_vector(rng, oracle.dim(), 16, 8);
    const Vector y = random_vector(rng, oracle.dim(), 16, 8);
    const Rational scale = random_rational(rng, 8, 8);
    const Rational rx = oracle.eval_exact(x);
    if (oracle.eval_exact(scale * x) != rational_abs(scale) * rx) {
      return fail("homogeneity failed at " + to_string(x));
    }
    if (oracle.eval_exact(x + y) > rx + oracle.eval_exact(y)) {
      return fail("triangle inequality failed at " + to_string(x) + ", " +
                  to_string(y));
    }
    if ((rx == 0) != is_zero(x)) {
      return fail("definiteness failed at " + to_string(x));
    }
  }
  return {};
}

Outcome lead_decomposition(const NormOracle& oracle, int samples,
                           std::uint64_t seed) {
  Rng rng(seed);
  const Polytope& ball = oracle.ball();
  for (int i = 0; i < samples; ++i) {
    const Vector x = random_nonzero_vector(rng, oracle.dim(), 16, 8);
    const GaugeResult g = gauge(ball, x);
    if (g.r <= 0 || !g.lead) return fail("gauge of nonzero x not positive");
    const Vector& lead = *g.lead;
    if (gauge(ball, lead).r != 1) return fail("lead point is not gauge-1");
    if (g.r * lead != x) return fail("x != r * lead");
    if (!lead_negation_closed(ball, lead)) {
      return fail("lead set not closed under negation at " + to_string(lead));
    }
    // Uniqueness: rebuilding x = s c from any lead point c recovers (s, c).
    const Rational s = random_positive_rational(rng, 8, 8);
    const GaugeResult scaled = gauge(ball, s * lead);
    if (scaled.r != s || !scaled.lead || *scaled.lead != lead) {
      return fail("decomposition of s*c did not recover (s, c)");
    }
  }
  return {};
}

Outcome unit_ball_recovery(const NormOracle& oracle) {
  const Polytope& ball = oracle.ball();
  for (const auto& v : ball.vertices()) {
    const Rational r = oracle.eval_exact(v);
    if (r > 1) return fail("ball vertex with gauge > 1: " + to_string(v));
    if (r == 1 && !is_lead_point(ball, v)) {
      return fail("gauge-1 vertex not recognized as lead point");
    }
  }
  return {};
}

Outcome smoothness_strictness_consistency(const NormOracle& oracle) {
  const PropertySResult smooth = satisfies_property_s(oracle);
  const StrictConvexityResult strict = is_strictly_convex(oracle);
  if (oracle.kind() == NormOracle::Kind::L2 || oracle.dim() <= 1) {
    if (!smooth.satisfied || !strict.strictly_convex) {
      return fail("smooth oracle misclassified");
    }
    return {};
  }
  if (smooth.satisfied || strict.strictly_convex) {
    return fail("polyhedral oracle of dim >= 2 misclassified");
  }
  // Property (S) witness: a lead point with two distinct valid functionals.
  const SmoothnessReport& report = *smooth.witness;
  if (report.witnesses.size() < 2 || report.witnesses[0] == report.witnesses[1]) {
    return fail("property-S witness lacks two distinct functionals");
  }
  for (const auto& f : report.witnesses) {
    if (dot(f, report.point) != 1) return fail("witness functional f(x0) != 1");
    for (const auto& v : oracle.ball().vertices()) {
      if (rational_abs(dot(f, v)) > 1) {
        return fail("witness functional exceeds 1 on the ball");
      }
    }
  }
  // Strictness witness: both endpoints are normed by every supporting
  // functional of the midpoint, so the pair shares the non-smooth facet.
  const auto& [x, y] = *strict.witness;
  const Vector midpoint = Rational(1, 2) * (x + y);
  const SmoothnessReport at_mid = supporting_functionals(oracle.ball(), midpoint);
  for (const auto& f : at_mid.witnesses) {
    if (dot(f, x) != 1 || dot(f, y) != 1) {
      return fail("midpoint functional does not norm both strictness endpoints");
    }
  }
  return {};
}

Outcome reflection_closure(const Polytope& p, const Vector& b0, int samples,
                           std::uint64_t seed) {
  Rng rng(seed);
  const Rational two(2);
  for (int i = 0; i < samples; ++i) {
    const Vector point = random_hull_point(rng, p);
    if (!contains(p, two * b0 - point)) {
      return fail("reflection left the polytope at " + to_string(point));
    }
    const Rational lambda = random_unit_rational(rng, 16);
    if (!contains(p, b0 + lambda * (point - b0))) {
      return fail("B - b0 is not balanced (scaling)");
    }
  }
  return {};
}

Outcome prop17_battery(const Polytope& p, const Vector& b0, int samples,
                       std::uint64_t seed) {
  Rng rng(seed);
  int done = 0;
  while (done < samples) {
    const Vector b = random_hull_point(rng, p);
    if (b == b0) continue;
    ++done;
    const BoundaryDecomposition d = prop17_decompose(p, b0, b);
    if (!contains(p, d.b1) || !contains(p, d.b2)) {
      return fail("decomposition endpoints left the polytope");
    }
    if (d.b1 + d.b2 != Rational(2) * b0) {
      return fail("endpoints are not antipodal through the centre");
    }
    if (d.alpha <= Rational(1, 2) || d.alpha > 1) {
      return fail("alpha outside (1/2, 1]");
    }
    if (d.alpha * d.b1 + (1 - d.alpha) * d.b2 != b) {
      return fail("reconstruction failed at " + to_string(b));
    }
    // Uniqueness in the convex-combination sense: nudging b1 towards b2
    // breaks the exact reconstruction.
    const Rational eps(1, 7);
    const Vector perturbed = d.b1 + eps * (d.b2 - d.b1);
    if (d.alpha * perturbed + (1 - d.alpha) * d.b2 == b) {
      return fail("perturbed decomposition still reconstructs b");
    }
  }
  return {};
}

Outcome simplex_inequality(int n, int samples, std::uint64_t seed) {
  if (n < 3) {
    return fail("the simplex bound needs n >= 3 (S_2 is a centred segment)");
  }
  Rng rng(seed);
  const Polytope simplex = standard_simplex(n);
  const NormOracle l1 = NormOracle::l1(n);
  const Rational bound = 2 * (1 - Rational(1, n));

  std::vector<Vector> candidates;
  candidates.push_back(Vector(std::vector<Rational>(n, Rational(1, n))));
  for (const auto& v : simplex.vertices()) candidates.push_back(v);
  for (int i = 0; i < samples; ++i) {
    candidates.push_back(random_hull_point(rng, simplex));
  }

  for (const auto& b0 : candidates) {
    int m = 0;
    for (int c = 1; c < n; ++c) {
      if (b0[c] < b0[m]) m = c;
    }
    const Rational distance = l1.eval_exact(Vector::unit(n, m) - b0);
    if (distance != 2 * (1 - b0[m])) {
      return fail("||e_m - b0||_1 != 2 (1 - b0_m)");
    }
    if (distance < bound) return fail("distance under the 2(1 - 1/n) bound");
    if (distance <= 1) return fail("distance bound did not exceed 1");
  }
  // Exact equality at the barycentre.
  if (l1.eval_exact(Vector::unit(n, 0) - candidates.front()) != bound) {
    return fail("barycentre distance is not exactly 2 (1 - 1/n)");
  }
  return {};
}

Outcome day_norm_oracles(const AdjoinedSpace& s, int samples,
                         std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const AdjoinedElement x = random_element(rng, s);
    if (s.order_unit_norm(x).rat != order_unit_norm_lp(s, x)) {
      return fail("order-unit norm disagrees with its LP definition");
    }
    if (s.base_norm(x).rat != base_norm_lp(s, x)) {
      return fail("base norm disagrees with its LP definition");
    }
  }
  return {};
}

Outcome day_base_representation(const AdjoinedSpace& s, int samples,
                                std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const Vector u = random_hull_point(rng, s.oracle().ball());
    const Rational alpha = random_positive_rational(rng, 8, 8);
    const AdjoinedElement x{alpha * u, alpha};
    if (!s.cone_member(x)) return fail("sampled element left the cone");
    // (v, alpha) = alpha (v / alpha, 1) with the scalar pinned by the
    // second coordinate; the base point must be a base member.
    const AdjoinedElement base_point{(1 / alpha) * x.v, Rational(1)};
    if (!s.base_member(base_point)) {
      return fail("rescaled cone element is not a base member");
    }
  }
  return {};
}

Outcome day_hull_characterization(const AdjoinedSpace& s, int samples,
                                  std::uint64_t seed) {
  Rng rng(seed);
  const Rational half(1, 2);
  for (int i = 0; i < samples; ++i) {
    const Vector x = random_hull_point(rng, s.oracle().ball());
    Rational alpha = random_unit_rational(rng, 16);
    if (rng.coin()) alpha = -alpha;
    const Rational norm_x = s.oracle().eval_exact(x);
    if (norm_x <= rational_abs(alpha)) {
      if (alpha == 0) continue;  // x = 0, alpha = 0: nothing to certify
      const AdjoinedElement base_point{(1 / alpha) * x, Rational(1)};
      if (!s.base_member(base_point)) {
        return fail("||x|| <= |alpha| case: x/alpha is not a base member");
      }
      continue;
    }
    const Vector y = (1 / norm_x) * x;
    const Rational lambda = half * (norm_x + alpha);
    const Rational mu = half * (norm_x - alpha);
    if (lambda < 0 || lambda > 1 || mu < 0 || mu > 1) {
      return fail("constructed weights outside [0, 1]");
    }
    // lambda (y, 1) - mu (-y, 1) must reproduce (x, alpha) exactly.
    if ((lambda + mu) * y != x || lambda - mu != alpha) {
      return fail("constructed decomposition failed to reproduce (x, alpha)");
    }
  }
  return {};
}

Outcome day_norm_sandwich(const AdjoinedSpace& s, int samples,
                          std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const AdjoinedElement x = random_element(rng, s);
    const Rational base = s.base_norm(x).rat;
    const Rational order = s.order_unit_norm(x).rat;
    if (base > order || order > 2 * base) {
      return fail("max/sum norm sandwich violated");
    }
  }
  return {};
}

Outcome thm_centre_routes(const BaseNormedSpace& s, int samples,
                          std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    // Alternate between cone-biased and fully signed samples so both
    // verdicts get exercised.
    Vector v;
    if (i % 2 == 0) {
      v = random_positive_rational(rng, 8, 8) * random_hull_point(rng, s.base());
    } else {
      v = random_span_element(rng, s);
    }
    const bool via_centre = s.cone_member_via_centre(v);
    const bool via_generators = s.cone_member_generators(v);
    const bool via_norm = s.base_norm_lp(v) == s.e_value(v);
    if (via_centre != via_generators || via_centre != via_norm) {
      return fail("cone membership routes disagree at " + to_string(v));
    }
    if (s.e_value(v) == 1) {
      if (s.base_member_via_centre(v) != contains(s.base(), v)) {
        return fail("base membership routes disagree at " + to_string(v));
      }
    }
  }
  return {};
}

Outcome cor_b4_equality(const BaseNormedSpace& s, int samples,
                        std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const Vector v = random_span_element(rng, s);
    const Rational lp = s.base_norm_lp(v);
    const Rational weight = s.e_value(v);
    const Rational radial = s.v0_gauge(v - weight * s.centre()).r;
    if (lp < radial || lp < rational_abs(weight)) {
      return fail("Lemma-b1 lower bound violated");
    }
    if (lp != s.norm_via_b4(v)) {
      return fail("max formula disagrees with the LP norm at " + to_string(v));
    }
  }
  return {};
}

Outcome kdecomp_battery(const BaseNormedSpace& s, int samples,
                        std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const Vector v = random_span_element(rng, s);
    const KDecomposeOutcome outcome = k_decompose(s, v);
    if (outcome.is_centre_multiple()) {
      if (v != *outcome.centre_multiple * s.centre()) {
        return fail("centre-multiple report does not reconstruct v");
      }
      continue;
    }
    const KDecomposition& d = *outcome.decomposition;
    if (d.alpha * d.k + d.beta * d.k_prime != v) {
      return fail("alpha k + beta k' != v at " + to_string(v));
    }
    if (rational_abs(d.alpha) < rational_abs(d.beta)) {
      return fail("|alpha| < |beta| normalization violated");
    }
    if (!s.is_k_point(d.k) || !s.is_k_point(d.k_prime)) {
      return fail("decomposition points left K");
    }
    if (d.k + d.k_prime != Rational(2) * s.centre()) {
      return fail("k' != 2 b0 - k");
    }
    // Uniqueness, executable form: the swapped pair reconstructs v as the
    // same decomposition, while perturbing k breaks exactness.
    if (d.beta * d.k_prime + d.alpha * d.k != v) {
      return fail("swapped representation does not reconstruct v");
    }
    if (d.alpha != d.beta) {
      const Rational eps(1, 9);
      const Vector perturbed = d.k + eps * (d.k_prime - d.k);
      const Vector mirrored = Rational(2) * s.centre() - perturbed;
      if (d.alpha * perturbed + d.beta * mirrored == v) {
        return fail("perturbed k still reconstructs v");
      }
    }
  }
  return {};
}

Outcome abs_axiom_battery(const BaseNormedSpace& s, int samples,
                          std::uint64_t seed) {
  const AxiomReport report = check_abs_axioms(s, samples, seed);
  for (int i = 0; i < 4; ++i) {
    if (!report.axiom[i].pass) {
      return fail("axiom (" + std::to_string(i + 1) + ") failed: " +
                  report.axiom[i].note);
    }
  }
  const bool strict = v0_strictly_convex(s).strictly_convex;
  if (report.axiom[4].pass != strict) {
    return fail("axiom (5) verdict disagrees with strict convexity of V0");
  }
  const ExtKResult ext = ext_equals_k(s);
  if (ext.equal != strict) {
    return fail("K = ext(B) verdict disagrees with strict convexity of V0");
  }
  if (!ext.equal) {
    const Vector& witness = *ext.witness;
    if (!s.is_k_point(witness)) return fail("ext witness is not a K point");
    if (std::find(s.base().vertices().begin(), s.base().vertices().end(),
                  witness) != s.base().vertices().end()) {
      return fail("ext witness unexpectedly listed as a vertex");
    }
  }
  return {};
}

Outcome central_state_battery(const OrderUnitSpace& s, int samples,
                              std::uint64_t seed) {
  const State tau{Covector::zero(s.v0_dim()), Rational(1)};
  const CentralStateResult central = is_central_state(s, tau, samples, seed);
  if (!central.central) {
    return fail("tau failed the central-state sampling check");
  }
  if (s.v0_dim() >= 1) {
    // A state pushed to the dual sphere along the first coordinate must be
    // refuted with a concrete cone witness.
    Covector f0 = Covector::unit(s.v0_dim(), 0);
    const NormValue dual = s.adjoined().dual_norm(f0);
    if (dual.exact) {
      f0 = (1 / dual.rat) * f0;
    }
    const CentralStateResult skew =
        is_central_state(s, State{f0, Rational(1)}, samples, seed);
    if (skew.central || !skew.witness) {
      return fail("off-centre state was not refuted");
    }
    const AdjoinedElement& w = *skew.witness;
    const State t{f0, Rational(1)};
    const AdjoinedElement reflected{-w.v, 2 * t(w) - w.alpha};
    if (!s.adjoined().cone_member(w) || s.adjoined().cone_member(reflected)) {
      return fail("refutation witness is not a genuine violation");
    }
  }
  return {};
}

Outcome spaceo_identity_battery(const OrderUnitSpace& s, int samples,
                                std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const AdjoinedElement v = random_element(rng, s.adjoined());
    const auto [lhs, rhs] = central_norm_identity(s, v);
    if (lhs != rhs) {
      return fail("||v|| != ||v - tau(v) e|| + |tau(v)|");
    }
  }
  return {};
}

Outcome orderq_inequality_battery(const OrderUnitSpace& s, int samples,
                                  std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const AdjoinedElement v = random_element(rng, s.adjoined());
    std::vector<Rational> alphas;
    for (int k = 0; k < 4; ++k) alphas.push_back(random_rational(rng, 16, 8));
    alphas.push_back(v.alpha);  // equality case
    if (best_scalar_approx(s, v, alphas)) {
      return fail("some alpha beat tau(v) in the order-unit norm");
    }
  }
  return {};
}

Outcome dual_descriptions_battery(const OrderUnitSpace& s, int samples,
                                  std::uint64_t seed) {
  Rng rng(seed);
  const AdjoinedSpace& space = s.adjoined();
  const auto& ball_vertices = space.oracle().ball().vertices();
  for (int i = 0; i < samples; ++i) {
    const Covector f0 = random_covector(rng, s.v0_dim(), 8, 8);
    const Rational c = random_rational(rng, 8, 8);
    // Positivity on the cone generators (w, 1).
    bool positive_on_generators = c >= 0;
    for (const auto& w : ball_vertices) {
      if (dot(f0, w) + c < 0) {
        positive_on_generators = false;
        break;
      }
    }
    const Rational dual = space.dual_norm(f0).rat;
    if (positive_on_generators != (dual <= c)) {
      return fail("dual positivity forms disagree");
    }
    // Dual norm of f0 + c tau against the vertex scan over the extreme
    // points (w, 0) and (0, +-1) of the order-unit ball.
    Rational scanned = rational_abs(c);
    for (const auto& w : ball_vertices) {
      scanned = std::max(scanned, rational_abs(dot(f0, w)));
    }
    if (scanned != std::max(dual, rational_abs(c))) {
      return fail("dual norm formula mismatch");
    }
    // States are exactly f0 + tau with dual norm <= 1.
    if (space.state_member(f0, c) != (c == 1 && dual <= 1)) {
      return fail("state membership mismatch");
    }
  }
  return {};
}

Outcome tracial_consistency(const OrderUnitSpace& s) {
  const TracialResult tracial = is_tracial(s);
  const StrictConvexityResult strict = is_strictly_convex(s.v0_oracle());
  if (tracial.tracial != strict.strictly_convex) {
    return fail("tracial verdict disagrees with strict convexity");
  }
  if (!tracial.tracial) {
    const DualSmoothnessWitness& w = *tracial.witness;
    if (w.first == w.second) return fail("dual witness points coincide");
    if (dot(w.functional, w.first) != 1 || dot(w.functional, w.second) != 1) {
      return fail("dual witness functional does not norm both points");
    }
    if (s.adjoined().dual_norm(w.functional).rat != 1) {
      return fail("dual witness functional is not on the dual sphere");
    }
    const NormOracle& oracle = s.v0_oracle();
    if (oracle.eval_exact(w.first) != 1 || oracle.eval_exact(w.second) != 1) {
      return fail("dual witness points are not unit vectors");
    }
  }
  return {};
}

Outcome affine_battery(const Polytope& b, const Vector& b0, int samples,
                       std::uint64_t seed) {
  Rng rng(seed);
  const AffineFunction one{Covector::zero(b.dim()), Rational(1)};
  {
    const CentralccsImage image = centralccs_iso(b, b0, one);
    if (image.theta.linear != Covector::zero(b.dim()) ||
        image.theta.constant != 0 || image.scalar != 1) {
      return fail("the order unit did not map to (0, 1)");
    }
  }
  for (int i = 0; i < samples; ++i) {
    const AffineFunction f = random_affine(rng, b.dim());
    if (!lemma19_check(b, b0, f)) {
      return fail("Lemma-19 equivalence failed");
    }
    const auto [lhs, rhs] = lemma20_check(b, b0, f);
    if (lhs != rhs) return fail("Lemma-20 identity failed");

    const CentralccsImage image = centralccs_iso(b, b0, f);
    if (image.theta(b0) != 0) return fail("theta(b0) != 0");
    const AffineFunction roundtrip{image.theta.linear,
                                   image.theta.constant + image.scalar};
    if (!(roundtrip == f)) return fail("centralccs round trip failed");
    const bool order_image =
        affine_sup_norm(b, image.theta) <= image.scalar;
    if (affine_is_positive(b, f) != order_image) {
      return fail("centralccs order preservation failed");
    }
    // Linearity spot check against a second function.
    const AffineFunction g = random_affine(rng, b.dim());
    const CentralccsImage image_g = centralccs_iso(b, b0, g);
    const AffineFunction sum{f.linear + g.linear, f.constant + g.constant};
    const CentralccsImage image_sum = centralccs_iso(b, b0, sum);
    if (!(image_sum.theta ==
          AffineFunction{image.theta.linear + image_g.theta.linear,
                         image.theta.constant + image_g.theta.constant}) ||
        image_sum.scalar != image.scalar + image_g.scalar) {
      return fail("centralccs is not additive");
    }
  }
  return {};
}

Outcome bn_example_battery(int n, int samples, std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const AffineFunction f = random_affine(rng, n);
    const auto [lhs, rhs] = bn_example_norm(n, f);
    if (lhs != rhs) {
      return fail("||f||_inf != |f(0)| + max |f(e_i) - f(0)| on B_" +
                  std::to_string(n));
    }
  }
  return {};
}

}  // namespace polycentre::batteries
