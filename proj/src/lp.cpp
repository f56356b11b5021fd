#include "polycentre/lp.hpp"

#include <cassert>
#include <string>

#include "polycentre/errors.hpp"

namespace polycentre {

namespace {

// Dense simplex tableau. rows_ holds [B^-1 A | B^-1 b]; cost_ holds the
// reduced-cost row of the active phase.
class Tableau {
 public:
  Tableau(const LpProblem& p)
      : n_(p.num_vars), m_(static_cast<int>(p.eq_lhs.size())) {
    rows_.assign(m_, std::vector<Rational>());
    for (int i = 0; i < m_; ++i) {
      rows_[i] = p.eq_lhs[i].coords;
      rows_[i].push_back(p.eq_rhs[i]);
      if (rows_[i].back() < 0) {
        for (auto& c : rows_[i]) c = -c;
      }
    }
  }

  // Appends identity columns for m artificial variables and sets up the
  // phase-1 cost row (minimize their sum).
  void start_phase1() {
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) {
        rows_[i].insert(rows_[i].end() - 1, Rational(k == i ? 1 : 0));
      }
      basis_[i] = n_ + i;
    }
    width_ = n_ + m_;
    cost_.assign(width_ + 1, Rational(0));
    // Reduced costs with the artificial basis: c_j - sum_i a_ij.
    for (int j = 0; j < n_; ++j) {
      Rational s(0);
      for (int i = 0; i < m_; ++i) s += rows_[i][j];
      cost_[j] = -s;
    }
    Rational obj(0);
    for (int i = 0; i < m_; ++i) obj += rows_[i][width_];
    cost_[width_] = -obj;  // cost_[width_] tracks -objective
  }

  // Runs Bland pivoting to optimality. Returns false when unbounded.
  bool run(int allowed_cols) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (cost_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      Rational best_ratio(0);
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio = rows_[i][width_] / rows_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  Rational phase1_objective() const { return -cost_[width_]; }

  // Drives leftover artificial variables out of the basis; drops redundant
  // rows whose artificial cannot be replaced.
  void purge_artificials() {
    for (int i = static_cast<int>(basis_.size()) - 1; i >= 0; --i) {
      if (basis_[i] < n_) continue;
      int replacement = -1;
      for (int j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0) {
          replacement = j;
          break;
        }
      }
      if (replacement >= 0) {
        pivot(i, replacement);
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
      }
    }
    // Physically remove artificial columns.
    for (auto& row : rows_) {
      row.erase(row.begin() + n_, row.begin() + width_);
    }
    width_ = n_;
  }

  // Installs the phase-2 reduced-cost row for the given objective.
  void start_phase2(const Covector& objective) {
    cost_.assign(width_ + 1, Rational(0));
    for (int j = 0; j <= width_; ++j) {
      Rational c = (j < n_) ? objective[j] : Rational(0);
      for (int i = 0; i < m_; ++i) {
        c -= objective[basis_[i]] * rows_[i][j];
      }
      cost_[j] = c;
    }
  }

  Vector extract_point() const {
    Vector x = Vector::zero(n_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_];
    }
    return x;
  }

 private:
  void pivot(int r, int s) {
    const Rational inv = 1 / rows_[r][s];
    for (auto& c : rows_[r]) c *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || rows_[i][s] == 0) continue;
      const Rational f = rows_[i][s];
      for (int j = 0; j <= width_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    if (cost_[s] != 0) {
      const Rational f = cost_[s];
      for (int j = 0; j <= width_; ++j) cost_[j] -= f * rows_[r][j];
    }
    basis_[r] = s;
  }

  int n_;
  int m_;
  int width_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> cost_;
  std::vector<int> basis_;
};

void validate(const LpProblem& p) {
  if (p.objective.dim() != p.num_vars) {
    throw DimensionMismatch("lp_solve: objective dim != num_vars");
  }
  if (p.eq_lhs.size() != p.eq_rhs.size()) {
    throw DimensionMismatch("lp_solve: constraint lhs/rhs count mismatch");
  }
  for (const auto& row : p.eq_lhs) {
    if (row.dim() != p.num_vars) {
      throw DimensionMismatch("lp_solve: constraint row dim != num_vars");
    }
  }
}

}  // namespace

LpOutcome lp_solve(const LpProblem& problem) {
  validate(problem);

  Tableau t(problem);
  t.start_phase1();
  const bool phase1_bounded = t.run(problem.num_vars + static_cast<int>(problem.eq_lhs.size()));
  assert(phase1_bounded);  // phase-1 objective is bounded below by zero
  (void)phase1_bounded;
  if (t.phase1_objective() != 0) {
    return {LpStatus::Infeasible, Rational(0), Vector()};
  }
  t.purge_artificials();
  t.start_phase2(problem.objective);
  if (!t.run(problem.num_vars)) {
    return {LpStatus::Unbounded, Rational(0), Vector()};
  }

  Vector x = t.extract_point();
  // Exactness guard: re-substitute into the original constraints.
  for (std::size_t i = 0; i < problem.eq_lhs.size(); ++i) {
    assert(dot(problem.eq_lhs[i], x) == problem.eq_rhs[i]);
  }
  Rational value = dot(problem.objective, x);
  return {LpStatus::Optimal, value, x};
}

int LpBuilder::add_var(VarSign sign) {
  signs_.push_back(sign);
  return static_cast<int>(signs_.size()) - 1;
}

int LpBuilder::add_vars(int count, VarSign sign) {
  const int first = var_count();
  for (int i = 0; i < count; ++i) signs_.push_back(sign);
  return first;
}

void LpBuilder::add_constraint(std::vector<Rational> row, Sense sense, Rational rhs) {
  if (static_cast<int>(row.size()) != var_count()) {
    throw DimensionMismatch("LpBuilder: constraint row width " +
                            std::to_string(row.size()) + " != var count " +
                            std::to_string(var_count()));
  }
  rows_.push_back({std::move(row), sense, std::move(rhs)});
}

LpBuilder::Outcome LpBuilder::minimize(std::vector<Rational> objective) const {
  if (static_cast<int>(objective.size()) != var_count()) {
    throw DimensionMismatch("LpBuilder: objective width mismatch");
  }

  // Column layout: each NonNegative var -> one column; each Free var -> a
  // (positive, negative) pair; one slack column per inequality row.
  std::vector<int> col_of(signs_.size());
  int cols = 0;
  for (std::size_t v = 0; v < signs_.size(); ++v) {
    col_of[v] = cols;
    cols += (signs_[v] == VarSign::Free) ? 2 : 1;
  }
  const int slack_base = cols;
  for (const auto& row : rows_) {
    if (row.sense != Sense::Eq) ++cols;
  }

  LpProblem p;
  p.num_vars = cols;
  p.objective = Covector::zero(cols);
  for (std::size_t v = 0; v < signs_.size(); ++v) {
    p.objective[col_of[v]] = objective[v];
    if (signs_[v] == VarSign::Free) p.objective[col_of[v] + 1] = -objective[v];
  }

  int slack = slack_base;
  for (const auto& row : rows_) {
    Covector lhs = Covector::zero(cols);
    for (std::size_t v = 0; v < signs_.size(); ++v) {
      lhs[col_of[v]] = row.coeffs[v];
      if (signs_[v] == VarSign::Free) lhs[col_of[v] + 1] = -row.coeffs[v];
    }
    if (row.sense == Sense::Le) {
      lhs[slack++] = 1;
    } else if (row.sense == Sense::Ge) {
      lhs[slack++] = -1;
    }
    p.eq_lhs.push_back(std::move(lhs));
    p.eq_rhs.push_back(row.rhs);
  }

  const LpOutcome raw = lp_solve(p);
  Outcome out{raw.status, raw.value, {}};
  if (raw.status == LpStatus::Optimal) {
    out.assignment.reserve(signs_.size());
    for (std::size_t v = 0; v < signs_.size(); ++v) {
      Rational value = raw.point[col_of[v]];
      if (signs_[v] == VarSign::Free) value -= raw.point[col_of[v] + 1];
      out.assignment.push_back(std::move(value));
    }
  }
  return out;
}

LpBuilder::Outcome LpBuilder::maximize(std::vector<Rational> objective) const {
  for (auto& c : objective) c = -c;
  Outcome out = minimize(std::move(objective));
  out.value = -out.value;
  return out;
}

LpBuilder::Outcome LpBuilder::feasible() const {
  return minimize(std::vector<Rational>(signs_.size(), Rational(0)));
}

}  // namespace polycentre
