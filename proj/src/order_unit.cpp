#include "polycentre/order_unit.hpp"

#include <algorithm>

#include "polycentre/centre.hpp"
#include "polycentre/errors.hpp"
#include "polycentre/sampling.hpp"
#include "polycentre/spaces.hpp"

namespace polycentre {

Rational State::operator()(const AdjoinedElement& x) const {
  return dot(f0, x.v) + weight * x.alpha;
}

bool is_valid_state(const OrderUnitSpace& s, const State& t) {
  return t.weight == 1 && s.adjoined().dual_norm_le(t.f0, Rational(1));
}

namespace {

bool covector_is_zero(const Covector& f) {
  for (const auto& c : f.coords) {
    if (c != 0) return false;
  }
  return true;
}

// Cone element violating v <= 2 t(v) e for a non-central state over an l2
// oracle. With Q = sum f0_i^2, scale u = -c f0 so that c^2 Q lands in
// (1/4, 1]; then (u, 1) is in the cone but 2 t(v) e - v is not. For Q > 1
// the unscaled (-f0, Q) already violates.
AdjoinedElement l2_noncentral_witness(const Covector& f0) {
  Vector g(f0.coords);
  Rational q = NormOracle::sq_l2(g);
  long c = 1;
  while (Rational(c) * Rational(c) * q <= Rational(1, 4)) ++c;
  const Rational scaled = Rational(c) * Rational(c) * q;
  if (scaled <= 1) {
    return {Rational(-c) * g, Rational(1)};
  }
  return {-g, q};
}

AdjoinedElement random_cone_element(Rng& rng, const AdjoinedSpace& space) {
  const Rational scale = random_positive_rational(rng, 8, 8);
  if (space.polyhedral()) {
    const Vector u = random_hull_point(rng, space.oracle().ball());
    const Rational slack = random_unit_rational(rng, 8);
    return {scale * u, scale * (1 + slack)};
  }
  const Vector u = random_vector(rng, space.base_dim(), 8, 8);
  const Rational q = NormOracle::sq_l2(u);
  const Rational alpha = std::max(Rational(1), q);
  return {scale * u, scale * alpha};
}

}  // namespace

CentralStateResult is_central_state(const OrderUnitSpace& s, const State& t,
                                    int samples, std::uint64_t seed) {
  if (!is_valid_state(s, t)) {
    throw PreconditionViolation("is_central_state: not a valid state");
  }
  const AdjoinedSpace& space = s.adjoined();
  const bool central = covector_is_zero(t.f0);

  if (!central) {
    AdjoinedElement witness =
        space.polyhedral()
            ? AdjoinedElement{space.dual_norm_minimizer(t.f0), Rational(1)}
            : l2_noncentral_witness(t.f0);
    const Rational tv = t(witness);
    const AdjoinedElement reflected{-witness.v, 2 * tv - witness.alpha};
    if (space.cone_member(witness) && !space.cone_member(reflected)) {
      return {false, std::move(witness)};
    }
    throw std::logic_error("non-central state witness construction failed");
  }

  // Cross-check the closed form on random cone elements.
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const AdjoinedElement v = random_cone_element(rng, space);
    const Rational tv = t(v);
    const AdjoinedElement reflected{-v.v, 2 * tv - v.alpha};
    if (!space.cone_member(reflected)) {
      return {false, v};
    }
  }
  return {true, std::nullopt};
}

std::pair<Rational, Rational> central_norm_identity(const OrderUnitSpace& s,
                                                    const AdjoinedElement& v) {
  if (!s.adjoined().polyhedral()) {
    throw PreconditionViolation("central_norm_identity needs a polyhedral oracle");
  }
  // Left side through the LP route, right side through the closed forms;
  // Prop-style identity, so the two must coincide exactly.
  const Rational lhs = order_unit_norm_lp(s.adjoined(), v);
  const Rational tau = v.alpha;
  const Rational rhs = s.v0_oracle().eval_exact(v.v) + rational_abs(tau);
  return {lhs, rhs};
}

std::optional<Rational> best_scalar_approx(const OrderUnitSpace& s,
                                           const AdjoinedElement& v,
                                           std::span<const Rational> alphas) {
  const AdjoinedSpace& space = s.adjoined();
  const AdjoinedElement centred{v.v, Rational(0)};
  const NormValue lhs = space.order_unit_norm(centred);
  for (const auto& alpha : alphas) {
    const AdjoinedElement shifted{v.v, v.alpha - alpha};
    const NormValue rhs = space.order_unit_norm(shifted);
    if (lhs.exact && rhs.exact) {
      if (lhs.rat > rhs.rat) return alpha;
    } else if (lhs.approx > rhs.approx + 1e-9) {
      return alpha;
    }
  }
  return std::nullopt;
}

Rational affine_sup_norm(const Polytope& b, const AffineFunction& f) {
  Rational best(0);
  for (const auto& v : b.vertices()) {
    best = std::max(best, rational_abs(f(v)));
  }
  return best;
}

bool affine_is_positive(const Polytope& b, const AffineFunction& f) {
  for (const auto& v : b.vertices()) {
    if (f(v) < 0) return false;
  }
  return true;
}

bool lemma19_check(const Polytope& b, const Vector& b0,
                   const AffineFunction& f) {
  if (!verify_centre(b, b0)) {
    throw PreconditionViolation("lemma19_check: b0 is not a centre");
  }
  const Rational at_centre = f(b0);
  const AffineFunction shifted{f.linear, f.constant - at_centre};
  const bool norm_side = affine_sup_norm(b, shifted) <= at_centre;
  return affine_is_positive(b, f) == norm_side;
}

std::pair<Rational, Rational> lemma20_check(const Polytope& b, const Vector& b0,
                                            const AffineFunction& f) {
  if (!verify_centre(b, b0)) {
    throw PreconditionViolation("lemma20_check: b0 is not a centre");
  }
  const Rational at_centre = f(b0);
  const AffineFunction shifted{f.linear, f.constant - at_centre};
  return {affine_sup_norm(b, f),
          affine_sup_norm(b, shifted) + rational_abs(at_centre)};
}

CentralccsImage centralccs_iso(const Polytope& b, const Vector& b0,
                               const AffineFunction& f) {
  if (!verify_centre(b, b0)) {
    throw PreconditionViolation("centralccs_iso: b0 is not a centre");
  }
  const Rational at_centre = f(b0);
  return {AffineFunction{f.linear, f.constant - at_centre}, at_centre};
}

std::pair<Rational, Rational> bn_example_norm(int n, const AffineFunction& f) {
  if (n < 2) throw PreconditionViolation("bn_example_norm: n must be >= 2");
  if (f.linear.dim() != n) {
    throw DimensionMismatch("bn_example_norm: affine function dim != n");
  }
  const Polytope bn = cross_polytope(n);
  const Rational lhs = affine_sup_norm(bn, f);
  // f(0) = constant and f(e_i) - f(0) = linear_i.
  Rational spread(0);
  for (const auto& c : f.linear.coords) {
    spread = std::max(spread, rational_abs(c));
  }
  return {lhs, rational_abs(f.constant) + spread};
}

TracialResult is_tracial(const OrderUnitSpace& s) {
  const StrictConvexityResult strict = is_strictly_convex(s.v0_oracle());
  if (strict.strictly_convex) return {true, std::nullopt};

  // V0 not strictly convex: a norm-one functional attained at two distinct
  // unit vectors refutes Property (S) for the dual ball (the state space
  // around tau). Any supporting functional at the segment midpoint norms
  // both endpoints.
  const auto& [x, y] = *strict.witness;
  const Polytope& ball = s.v0_oracle().ball();
  const Rational half(1, 2);
  const Vector midpoint = half * (x + y);
  const SmoothnessReport smooth = supporting_functionals(ball, midpoint);
  const Covector& f = smooth.witnesses.front();
  if (dot(f, x) != 1 || dot(f, y) != 1) {
    throw std::logic_error("midpoint functional failed to norm both endpoints");
  }
  return {false, DualSmoothnessWitness{f, x, y}};
}

}  // namespace polycentre
