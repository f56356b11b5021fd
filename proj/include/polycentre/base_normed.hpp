#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polycentre/adjoined.hpp"
#include "polycentre/centre.hpp"

namespace polycentre {

/// Base normed space in V-representation: the base B is a polytope sitting
/// on the hyperplane { e = 1 }, the cone is generated by B, and the norm is
/// the gauge of co(B u -B). An optional verified centre b0 unlocks the
/// centre-based calculus (K-decomposition, absolute value, the max norm
/// formula).
class BaseNormedSpace {
 public:
  /// Validates <e, vertex> = 1 for every vertex (this already keeps 0 off
  /// the affine hull of B) and, when given, that b0 is a centre of B.
  BaseNormedSpace(Polytope base, Covector e, std::optional<Vector> centre);

  /// The lifted view of an adjoined space: base { (w, 1) }, e the last
  /// coordinate functional, centre (0, 1). Polyhedral oracles only.
  static BaseNormedSpace from_adjoined(const AdjoinedSpace& s);

  int ambient_dim() const { return base_.dim(); }
  const Polytope& base() const { return base_; }
  const Covector& e() const { return e_; }
  bool has_centre() const { return centre_.has_value(); }
  const Vector& centre() const;

  /// Generators of the V0 unit ball B - b0 (flat in the ambient space).
  const std::vector<Vector>& v0_generators() const;

  /// Gauge of u against B - b0; the norm of V0 when e(u) = 0.
  GaugeResult v0_gauge(const Vector& u) const;

  /// k is in K iff e(k) = 1 and ||k - b0|| = 1.
  bool is_k_point(const Vector& k) const;

  /// Cone membership via the centre: ||v - e(v) b0|| <= e(v).
  bool cone_member_via_centre(const Vector& v) const;

  /// Cone membership by generators: v is a nonnegative combination of base
  /// vertices (exact LP).
  bool cone_member_generators(const Vector& v) const;

  /// Base membership via the centre: e(v) = 1 and ||v - b0|| <= 1.
  bool base_member_via_centre(const Vector& v) const;

  /// Brute-force base norm: least total weight lambda + mu writing
  /// v = (combination of base vertices) - (another). Throws SpanError when
  /// v is outside the span of the cone.
  Rational base_norm_lp(const Vector& v) const;

  /// The closed form max( ||v - e(v) b0||, |e(v)| ).
  Rational norm_via_b4(const Vector& v) const;

  Rational e_value(const Vector& v) const { return dot(e_, v); }

 private:
  Polytope base_;
  Covector e_;
  std::optional<Vector> centre_;
  std::vector<Vector> v0_generators_;
};

/// v = alpha k + beta k' with k' = 2 b0 - k, both in K, and |alpha| >= |beta|.
struct KDecomposition {
  Vector k;
  Vector k_prime;
  Rational alpha;
  Rational beta;
};

/// Multiples of the centre have no distinguished k; they decompose as
/// (lambda/2)(k + k') for every k, reported by the scalar alone.
struct KDecomposeOutcome {
  std::optional<KDecomposition> decomposition;
  std::optional<Rational> centre_multiple;

  bool is_centre_multiple() const { return centre_multiple.has_value(); }
};

KDecomposeOutcome k_decompose(const BaseNormedSpace& s, const Vector& v);

/// Canonical absolute value |alpha| k + |beta| k' (|lambda| b0 for centre
/// multiples); always lands in the cone.
Vector abs_value(const BaseNormedSpace& s, const Vector& v);

/// One absolute-value axiom verdict with an offending triple when refuted.
struct AxiomCheck {
  bool pass = true;
  std::string note;
  std::vector<Vector> witness;
};

/// Randomized exact verification of the five absolutely-ordered-space
/// axioms. (1)-(4) hold in every centred base normed space; (5) holds iff
/// V0 is strictly convex, and the refutation is built constructively on a
/// flat face rather than left to random search.
struct AxiomReport {
  AxiomCheck axiom[5];
  int samples = 0;
  std::uint64_t seed = 0;

  bool all_pass() const {
    for (const auto& a : axiom) {
      if (!a.pass) return false;
    }
    return true;
  }
};

AxiomReport check_abs_axioms(const BaseNormedSpace& s, int samples,
                             std::uint64_t seed);

/// K = ext(B) test: true iff the V0 ball is strictly convex, in which case
/// the K points are exactly the extreme points of B. The witness on failure
/// is a K point that is a proper convex combination (a facet midpoint).
struct ExtKResult {
  bool equal;
  std::optional<Vector> witness;
};

ExtKResult ext_equals_k(const BaseNormedSpace& s);

/// Strict convexity of the V0 ball (B - b0 inside the e-kernel).
StrictConvexityResult v0_strictly_convex(const BaseNormedSpace& s);

}  // namespace polycentre
