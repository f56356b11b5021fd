#pragma once

#include <cstdint>
#include <string>

#include "polycentre/base_normed.hpp"
#include "polycentre/order_unit.hpp"
#include "polycentre/sampling.hpp"

namespace polycentre::batteries {

/// Verdict of one randomized theorem battery. `detail` describes the first
/// failure; empty on pass.
struct Outcome {
  bool pass = true;
  std::string detail;
};

AffineFunction random_affine(Rng& rng, int dim, long max_num = 64,
                             long max_den = 64);

// --- gauges and lead points -------------------------------------------------

/// Norm axioms of the gauge, exactly: absolute homogeneity, triangle
/// inequality, definiteness. Polyhedral oracles only.
Outcome gauge_norm_axioms(const NormOracle& oracle, int samples,
                          std::uint64_t seed);

/// Lead decomposition: uniqueness of x = r * lead, lead negation closure,
/// and recovery of (s, c) from x = s c with c a lead point.
Outcome lead_decomposition(const NormOracle& oracle, int samples,
                           std::uint64_t seed);

/// Unit-ball recovery: every ball vertex has gauge <= 1, with equality
/// exactly on the lead vertices.
Outcome unit_ball_recovery(const NormOracle& oracle);

/// Property (S) and strict convexity verdicts are consistent, and their
/// witnesses certify each other (the strictness pair is normed by every
/// supporting functional of its midpoint).
Outcome smoothness_strictness_consistency(const NormOracle& oracle);

// --- centres of polytopes ---------------------------------------------------

/// Reflection closure b -> 2 b0 - b on random hull points, plus the
/// balanced-and-convex property of B - b0.
Outcome reflection_closure(const Polytope& p, const Vector& b0, int samples,
                           std::uint64_t seed);

/// Boundary decomposition through the centre: membership, antipodality,
/// exact reconstruction and perturbation-breaks-uniqueness.
Outcome prop17_battery(const Polytope& p, const Vector& b0, int samples,
                       std::uint64_t seed);

/// The l1^n simplex bound: every candidate centre b0 of S_n admits a vertex
/// e_m with ||e_m - b0||_1 = 2 (1 - b0_m) >= 2 (1 - 1/n) > 1.
Outcome simplex_inequality(int n, int samples, std::uint64_t seed);

// --- Day adjunction ---------------------------------------------------------

/// Order-unit and base norms against their independent LP definitions.
Outcome day_norm_oracles(const AdjoinedSpace& s, int samples,
                         std::uint64_t seed);

/// Unique base representation of nonzero cone elements.
Outcome day_base_representation(const AdjoinedSpace& s, int samples,
                                std::uint64_t seed);

/// co(B u -B) characterization with the explicitly constructed weights
/// 2 lambda = ||x|| + alpha, 2 mu = ||x|| - alpha.
Outcome day_hull_characterization(const AdjoinedSpace& s, int samples,
                                  std::uint64_t seed);

/// max <= sum <= 2 max between the two norms.
Outcome day_norm_sandwich(const AdjoinedSpace& s, int samples,
                          std::uint64_t seed);

// --- base normed spaces with a centre ---------------------------------------

/// Cone and base membership through the centre, through generators, and
/// through the norm route, all agreeing.
Outcome thm_centre_routes(const BaseNormedSpace& s, int samples,
                          std::uint64_t seed);

/// The Cor-b4 max formula equals the LP base norm; the b1 lower bounds hold.
Outcome cor_b4_equality(const BaseNormedSpace& s, int samples,
                        std::uint64_t seed);

/// K-decomposition reconstruction, K membership, |alpha| >= |beta|, and the
/// swap symmetry / perturbation sensitivity of the uniqueness claim.
Outcome kdecomp_battery(const BaseNormedSpace& s, int samples,
                        std::uint64_t seed);

/// Absolute-value axioms (1)-(4) must pass; axiom (5) must match the strict
/// convexity of V0 and the K = ext(B) verdict.
Outcome abs_axiom_battery(const BaseNormedSpace& s, int samples,
                          std::uint64_t seed);

// --- order unit spaces with a central state ----------------------------------

/// Prop-dualo forms of the cone agree on random elements; tau really is
/// central; a deliberately off-centre state is refuted with a witness.
Outcome central_state_battery(const OrderUnitSpace& s, int samples,
                              std::uint64_t seed);

/// ||v|| = ||v - tau(v) e|| + |tau(v)| with the left side through the LP.
Outcome spaceo_identity_battery(const OrderUnitSpace& s, int samples,
                                std::uint64_t seed);

/// tau(v) beats every other scalar multiple of e.
Outcome orderq_inequality_battery(const OrderUnitSpace& s, int samples,
                                  std::uint64_t seed);

/// Dual-side remark: positivity of (f0, c) on the cone generators matches
/// ||f0||* <= c; dual norm matches max(||f0||*, |c|); states are exactly
/// f0 + tau with ||f0||* <= 1.
Outcome dual_descriptions_battery(const OrderUnitSpace& s, int samples,
                                  std::uint64_t seed);

/// is_tracial agrees with strict convexity; refutations carry a norm-one
/// functional attained at two distinct unit vectors.
Outcome tracial_consistency(const OrderUnitSpace& s);

// --- affine calculus --------------------------------------------------------

/// Lemma 19 equivalence, Lemma 20 identity, and the centralccs isogeny
/// (round trip, unitality, linearity, order preservation both ways).
Outcome affine_battery(const Polytope& b, const Vector& b0, int samples,
                       std::uint64_t seed);

/// The l_inf (+)_1 R formula on B_n for random affine functions.
Outcome bn_example_battery(int n, int samples, std::uint64_t seed);

}  // namespace polycentre::batteries
