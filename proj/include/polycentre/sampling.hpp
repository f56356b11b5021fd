#pragma once

#include <cstdint>
#include <random>

#include "polycentre/polytope.hpp"

namespace polycentre {

/// Seeded generator for the randomized theorem batteries. Draws go through
/// explicit modulo reduction rather than std::uniform_int_distribution,
/// whose output is implementation-defined; reports must be byte-identical
/// for a given seed on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 gen_;
};

/// Numerator in [-max_num, max_num], denominator in [1, max_den]; small by
/// design to keep the LP sizes tame.
Rational random_rational(Rng& rng, long max_num = 64, long max_den = 64);

/// Strictly positive rational with the same bounds.
Rational random_positive_rational(Rng& rng, long max_num = 64, long max_den = 64);

/// Rational drawn from [0, 1].
Rational random_unit_rational(Rng& rng, long max_den = 64);

Vector random_vector(Rng& rng, int dim, long max_num = 64, long max_den = 64);

Vector random_nonzero_vector(Rng& rng, int dim, long max_num = 8, long max_den = 8);

Covector random_covector(Rng& rng, int dim, long max_num = 64, long max_den = 64);

/// Random convex combination of the polytope's vertices (integer weights,
/// normalized exactly).
Vector random_hull_point(Rng& rng, const Polytope& p);

/// Absolutely convex full-dimensional ball: arm_pairs random +-w vertex
/// pairs, resampled until the span has full rank.
Polytope random_abs_convex_ball(Rng& rng, int dim, int arm_pairs);

}  // namespace polycentre
