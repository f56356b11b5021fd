#pragma once

#include <optional>
#include <vector>

#include "polycentre/linalg.hpp"
#include "polycentre/rational.hpp"

namespace polycentre {

/// Standard-form linear program: minimize objective . x subject to
/// eq_lhs[i] . x = eq_rhs[i] for all i and x >= 0 componentwise.
struct LpProblem {
  Covector objective;
  std::vector<Covector> eq_lhs;
  std::vector<Rational> eq_rhs;
  int num_vars = 0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status;
  Rational value;  // meaningful iff Optimal
  Vector point;    // meaningful iff Optimal; a basic feasible solution

  bool optimal() const { return status == LpStatus::Optimal; }
};

/// Exact two-phase simplex with Bland's anti-cycling rule. Every pivot is
/// carried out over Rational, so Optimal outcomes satisfy all constraints
/// with literal equality. Deterministic: identical problems give identical
/// outcomes. Throws DimensionMismatch on malformed problems.
LpOutcome lp_solve(const LpProblem& problem);

// ---------------------------------------------------------------------------
// Convenience layer: general constraints lowered to the standard form above.
// ---------------------------------------------------------------------------

enum class VarSign { NonNegative, Free };
enum class Sense { Eq, Le, Ge };

/// Small builder for problems with free variables and inequality rows.
/// Free variables become differences of nonnegative pairs, inequalities get
/// slack variables, then lp_solve does the work. Solutions are mapped back
/// to the builder's variables.
class LpBuilder {
 public:
  int add_var(VarSign sign = VarSign::NonNegative);
  int add_vars(int count, VarSign sign = VarSign::NonNegative);

  /// Dense constraint row over all variables added so far.
  void add_constraint(std::vector<Rational> row, Sense sense, Rational rhs);

  struct Outcome {
    LpStatus status;
    Rational value;
    std::vector<Rational> assignment;  // one entry per builder variable

    bool optimal() const { return status == LpStatus::Optimal; }
  };

  /// Minimize objective (dense over builder variables).
  Outcome minimize(std::vector<Rational> objective) const;
  /// Maximize = minimize the negation; reported value is the maximum.
  Outcome maximize(std::vector<Rational> objective) const;
  /// Pure feasibility: minimize 0.
  Outcome feasible() const;

  int var_count() const { return static_cast<int>(signs_.size()); }

 private:
  struct Row {
    std::vector<Rational> coeffs;
    Sense sense;
    Rational rhs;
  };

  std::vector<VarSign> signs_;
  std::vector<Row> rows_;
};

}  // namespace polycentre
