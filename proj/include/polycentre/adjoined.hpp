#pragma once

#include "polycentre/gauge.hpp"

namespace polycentre {

/// Element (v, alpha) of the adjunction V x R.
struct AdjoinedElement {
  Vector v;
  Rational alpha;

  bool operator==(const AdjoinedElement&) const = default;
};

/// Day's construction over a normed space V: the ordered space V x R with
/// cone { (v, alpha) : ||v|| <= alpha }. Carries two geometries on the same
/// space: the order-unit norm ||v|| + |alpha| with unit e = (0, 1), and the
/// base norm max(||v||, |alpha|) with base { (v, 1) : ||v|| <= 1 }.
class AdjoinedSpace {
 public:
  explicit AdjoinedSpace(NormOracle oracle) : oracle_(std::move(oracle)) {}

  const NormOracle& oracle() const { return oracle_; }
  int base_dim() const { return oracle_.dim(); }
  bool polyhedral() const { return oracle_.polyhedral(); }

  /// ||v|| <= alpha, exact for every oracle kind (l2 via squares).
  bool cone_member(const AdjoinedElement& x) const;

  /// ||v|| + |alpha|.
  NormValue order_unit_norm(const AdjoinedElement& x) const;

  /// max(||v||, |alpha|).
  NormValue base_norm(const AdjoinedElement& x) const;

  /// alpha = 1 and ||v|| <= 1.
  bool base_member(const AdjoinedElement& x) const;

  /// (f, c) is a state iff c = 1 and the dual norm of f is at most 1.
  bool state_member(const Covector& f, const Rational& c) const;

  /// Dual norm of a functional on V; for polyhedral oracles the exact max
  /// of |f| over the unit-ball vertices.
  NormValue dual_norm(const Covector& f) const;
  bool dual_norm_le(const Covector& f, const Rational& bound) const;

  /// A ball vertex with gauge 1 minimizing f; the minimum equals minus the
  /// dual norm. Polyhedral only.
  Vector dual_norm_minimizer(const Covector& f) const;

 private:
  void check_dims(const AdjoinedElement& x) const;

  NormOracle oracle_;
};

/// Independent LP route to the order-unit norm (polyhedral oracles):
/// min { t : t e - x and t e + x lie in the cone }, with cone membership
/// expressed through ball-vertex generators.
Rational order_unit_norm_lp(const AdjoinedSpace& s, const AdjoinedElement& x);

/// Independent LP route to the base norm: the least total weight writing x
/// as a nonnegative combination of lifted base points minus another.
Rational base_norm_lp(const AdjoinedSpace& s, const AdjoinedElement& x);

/// The base { (w, 1) : w a ball vertex } as a polytope in R^(dim+1).
Polytope adjoined_base_polytope(const AdjoinedSpace& s);

/// Flat coordinates (v_1, ..., v_n, alpha) -> element.
AdjoinedElement element_from_coords(const Vector& coords);
Vector element_to_coords(const AdjoinedElement& x);

}  // namespace polycentre
