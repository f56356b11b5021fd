#pragma once

#include "polycentre/polytope.hpp"

namespace polycentre {

/// S_n = co{e_1, ..., e_n} in R^n, the base of l1^n.
Polytope standard_simplex(int n);

/// co{+-e_1, ..., +-e_n}: the l1^n unit ball, equal to co(S_n u -S_n).
/// Vertex order e_1..e_n, -e_1..-e_n.
Polytope cross_polytope(int n);

/// [-1, 1]^n, the linf^n unit ball. Vertices enumerate sign patterns with
/// the last coordinate flipping fastest, starting from the all-ones corner.
Polytope hypercube(int n);

/// co{b0 +- w : w in arms}: a polytope symmetric about b0, so b0 is its
/// centre by construction. Zero arms are rejected.
Polytope symmetric_polytope(const Vector& b0, std::span<const Vector> arms);

}  // namespace polycentre
