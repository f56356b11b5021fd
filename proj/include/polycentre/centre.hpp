#pragma once

#include <optional>

#include "polycentre/gauge.hpp"
#include "polycentre/polytope.hpp"

namespace polycentre {

/// Outcome of the centre search. `witness`, when present on NotFound, is a
/// single vertex that already admits no reflected counterpart for any
/// candidate centre (found by per-vertex LP probing).
struct CentreResult {
  std::optional<Vector> centre;
  std::optional<Vector> witness;

  bool found() const { return centre.has_value(); }
};

/// True iff 2*b0 - v lies in P for every vertex v. Since b -> 2*b0 - b is
/// affine, mapping all vertices into P maps all of P into P. Throws
/// PreconditionViolation when b0 is outside P.
bool verify_centre(const Polytope& p, const Vector& b0);

/// Solves one exact joint feasibility LP: convex weights for a candidate b0
/// together with, for every vertex v, convex weights expressing 2*b0 - v as
/// a point of P.
CentreResult find_centre(const Polytope& p);

/// The centre set of P is itself a polyhedron; b0 is the unique centre iff
/// every coordinate range over that polyhedron is degenerate. Requires that
/// b0 actually is a centre.
bool centre_is_unique(const Polytope& p, const Vector& b0);

/// Boundary decomposition through the centre: for b in P, b != b0, the
/// unique triple b = alpha*b1 + (1-alpha)*b2 with b1, b2 antipodal gauge-1
/// points of P - b0 and 1/2 < alpha <= 1.
struct BoundaryDecomposition {
  Vector b1;
  Vector b2;
  Rational alpha;
};

BoundaryDecomposition prop17_decompose(const Polytope& p, const Vector& b0,
                                       const Vector& b);

}  // namespace polycentre
