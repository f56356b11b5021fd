#pragma once

#include <cstdint>
#include <span>

#include "polycentre/adjoined.hpp"
#include "polycentre/polytope.hpp"

namespace polycentre {

/// Order unit space with a central state, kept in adjoined form V0 x R:
/// cone { (u, alpha) : ||u|| <= alpha }, unit e = (0, 1), central state tau
/// = evaluation of the scalar part.
class OrderUnitSpace {
 public:
  explicit OrderUnitSpace(NormOracle v0_oracle) : space_(std::move(v0_oracle)) {}

  const AdjoinedSpace& adjoined() const { return space_; }
  const NormOracle& v0_oracle() const { return space_.oracle(); }
  int v0_dim() const { return space_.base_dim(); }

 private:
  AdjoinedSpace space_;
};

/// State f = f0 + weight * tau; valid when weight = 1 and ||f0||* <= 1.
struct State {
  Covector f0;
  Rational weight;

  Rational operator()(const AdjoinedElement& x) const;
};

bool is_valid_state(const OrderUnitSpace& s, const State& t);

/// Central-state test: closed form (f0 = 0) cross-checked on random cone
/// elements v, where 2 t(v) e - v must stay in the cone. A violating cone
/// element is returned as witness.
struct CentralStateResult {
  bool central;
  std::optional<AdjoinedElement> witness;
};

CentralStateResult is_central_state(const OrderUnitSpace& s, const State& t,
                                    int samples = 200, std::uint64_t seed = 0);

/// Both sides of ||v|| = ||v - tau(v) e|| + |tau(v)|, computed separately.
std::pair<Rational, Rational> central_norm_identity(const OrderUnitSpace& s,
                                                    const AdjoinedElement& v);

/// tau(v) is the best scalar approximant: ||v - tau(v) e|| <= ||v - a e||
/// for every supplied a. Returns the violating a if any (there must be none).
std::optional<Rational> best_scalar_approx(const OrderUnitSpace& s,
                                           const AdjoinedElement& v,
                                           std::span<const Rational> alphas);

// ---------------------------------------------------------------------------
// Affine-function calculus over a centred polytope.
// ---------------------------------------------------------------------------

/// f(b) = <linear, b> + constant.
struct AffineFunction {
  Covector linear;
  Rational constant;

  Rational operator()(const Vector& b) const { return dot(linear, b) + constant; }

  bool operator==(const AffineFunction&) const = default;
};

/// Sup norm over the polytope; affine functions attain it at vertices.
Rational affine_sup_norm(const Polytope& b, const AffineFunction& f);

/// f >= 0 on the polytope (vertex minimum).
bool affine_is_positive(const Polytope& b, const AffineFunction& f);

/// Positivity is equivalent to ||f - f(b0) 1||_inf <= f(b0) over a centred
/// polytope; returns whether the two sides agree (they always must).
bool lemma19_check(const Polytope& b, const Vector& b0, const AffineFunction& f);

/// Both sides of ||f||_inf = ||f - f(b0) 1||_inf + |f(b0)|.
std::pair<Rational, Rational> lemma20_check(const Polytope& b, const Vector& b0,
                                            const AffineFunction& f);

/// The unital order isomorphism A(B) -> A_0(B) x R: f maps to
/// (f - f(b0) 1, f(b0)).
struct CentralccsImage {
  AffineFunction theta;
  Rational scalar;
};

CentralccsImage centralccs_iso(const Polytope& b, const Vector& b0,
                               const AffineFunction& f);

/// Both sides of the l_inf (+)_1 R formula on B_n = co(S_n u -S_n):
/// ||f||_inf = |f(0)| + max_i |f(e_i) - f(0)|.
std::pair<Rational, Rational> bn_example_norm(int n, const AffineFunction& f);

/// Tracial = the state space satisfies Property (S) = V0 strictly convex.
/// For refuted polyhedral spaces the dual witness carries a norm-one
/// functional attained at two distinct unit vectors.
struct DualSmoothnessWitness {
  Covector functional;
  Vector first;
  Vector second;
};

struct TracialResult {
  bool tracial;
  std::optional<DualSmoothnessWitness> witness;
};

TracialResult is_tracial(const OrderUnitSpace& s);

}  // namespace polycentre
