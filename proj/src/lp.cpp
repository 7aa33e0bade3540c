#include "qinv/lp.hpp"

#include <cmath>
#include <vector>

namespace qinv {

namespace {

constexpr double kOptTol = 1e-9;    // reduced-cost optimality tolerance
constexpr double kPivotTol = 1e-9;  // smallest acceptable pivot element
constexpr double kFeasTol = 1e-7;   // phase-1 residual treated as infeasible
constexpr int kStallLimit = 60;     // degenerate pivots before switching to Bland

class Tableau {
 public:
  Tableau(RealMatrix tab, std::vector<Index> basis, std::vector<bool> allowed)
      : tab_(std::move(tab)), basis_(std::move(basis)), allowed_(std::move(allowed)) {
    m_ = tab_.rows() - 1;
    n_ = tab_.cols() - 1;
  }

  Index rows() const { return m_; }
  Index cols() const { return n_; }
  double rhs(Index i) const { return tab_(i, n_); }
  double entry(Index i, Index j) const { return tab_(i, j); }
  double reduced_cost(Index j) const { return tab_(m_, j); }
  double objective() const { return -tab_(m_, n_); }
  const std::vector<Index>& basis() const { return basis_; }

  void forbid(Index j) { allowed_[j] = false; }

  // Installs reduced costs for the cost vector (minimization).
  void set_costs(const RealVector& costs) {
    tab_.row(m_).setZero();
    for (Index j = 0; j < n_; ++j) tab_(m_, j) = costs[j];
    tab_(m_, n_) = 0.0;
    for (Index i = 0; i < m_; ++i) {
      const double cb = costs[basis_[i]];
      if (cb != 0.0) tab_.row(m_) -= cb * tab_.row(i);
    }
  }

  void pivot(Index row, Index col) {
    tab_.row(row) /= tab_(row, col);
    for (Index i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = tab_(i, col);
      if (f != 0.0) tab_.row(i) -= f * tab_.row(row);
    }
    basis_[row] = col;
  }

  enum class RunResult { optimal, unbounded, iteration_limit };

  RunResult run(int max_iterations, int& iterations, Index& unbounded_col) {
    int stalled = 0;
    bool bland = false;
    while (iterations < max_iterations) {
      const Index col = bland ? pick_entering_bland() : pick_entering_dantzig();
      if (col < 0) return RunResult::optimal;
      const Index row = pick_leaving(col, bland);
      if (row < 0) {
        unbounded_col = col;
        return RunResult::unbounded;
      }
      const double before = objective();
      pivot(row, col);
      ++iterations;
      if (objective() < before - 1e-12 * std::max(1.0, std::abs(before))) {
        stalled = 0;
        bland = false;
      } else if (++stalled > kStallLimit) {
        bland = true;
      }
    }
    return RunResult::iteration_limit;
  }

  bool has_alternate_optimum() const {
    std::vector<bool> in_basis(n_, false);
    for (Index b : basis_) in_basis[b] = true;
    for (Index j = 0; j < n_; ++j) {
      if (in_basis[j] || !allowed_[j] || std::abs(tab_(m_, j)) > kOptTol) continue;
      for (Index i = 0; i < m_; ++i) {
        if (tab_(i, j) > kPivotTol && rhs(i) / tab_(i, j) > 1e-9) return true;
        // An unbounded zero-cost column also reaches another optimum.
      }
      bool any_positive = false;
      for (Index i = 0; i < m_; ++i) any_positive = any_positive || tab_(i, j) > kPivotTol;
      if (!any_positive) return true;
    }
    return false;
  }

 private:
  Index pick_entering_dantzig() const {
    Index best = -1;
    double most_negative = -kOptTol;
    for (Index j = 0; j < n_; ++j) {
      if (!allowed_[j]) continue;
      const double r = tab_(m_, j);
      if (r < most_negative) {
        most_negative = r;
        best = j;
      }
    }
    return best;
  }

  Index pick_entering_bland() const {
    for (Index j = 0; j < n_; ++j)
      if (allowed_[j] && tab_(m_, j) < -kOptTol) return j;
    return -1;
  }

  Index pick_leaving(Index col, bool bland) const {
    Index best = -1;
    double best_ratio = 0.0;
    for (Index i = 0; i < m_; ++i) {
      const double a = tab_(i, col);
      if (a <= kPivotTol) continue;
      const double ratio = rhs(i) / a;
      if (best < 0 || ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 &&
           (bland ? basis_[i] < basis_[best] : a > tab_(best, col)))) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  RealMatrix tab_;
  std::vector<Index> basis_;
  std::vector<bool> allowed_;
  Index m_ = 0;
  Index n_ = 0;
};

}  // namespace

LpSolution solve_lp(const RealMatrix& a_eq, const RealVector& b_eq, const RealMatrix& a_in,
                    const RealVector& b_in, const RealVector& c, int max_iterations) {
  const Index nx = c.size();
  const Index me = a_eq.rows();
  const Index mi = a_in.rows();
  const Index m = me + mi;
  const Index n_split = 2 * nx;

  // Column layout: [u | v | surplus | artificials], x = u - v.
  RealMatrix rows = RealMatrix::Zero(m, n_split + mi);
  RealVector rhs(m);
  for (Index i = 0; i < me; ++i) {
    rows.row(i).head(nx) = a_eq.row(i);
    rows.row(i).segment(nx, nx) = -a_eq.row(i);
    rhs[i] = b_eq[i];
  }
  for (Index i = 0; i < mi; ++i) {
    rows.row(me + i).head(nx) = a_in.row(i);
    rows.row(me + i).segment(nx, nx) = -a_in.row(i);
    rows(me + i, n_split + i) = -1.0;
    rhs[me + i] = b_in[i];
  }
  for (Index i = 0; i < m; ++i) {
    if (rhs[i] < 0.0) {
      rows.row(i) = -rows.row(i);
      rhs[i] = -rhs[i];
    }
  }

  // Surplus columns with rhs 0 can start basic after a row flip; everything
  // else gets an artificial.
  std::vector<Index> basis(m, -1);
  std::vector<Index> needs_artificial;
  for (Index i = 0; i < m; ++i) {
    if (i >= me) {
      const Index s = n_split + (i - me);
      if (rows(i, s) > 0.5) {
        basis[i] = s;
        continue;
      }
      if (rhs[i] == 0.0) {
        rows.row(i) = -rows.row(i);
        basis[i] = s;
        continue;
      }
    }
    needs_artificial.push_back(i);
  }
  const Index na = static_cast<Index>(needs_artificial.size());
  const Index n_total = n_split + mi + na;

  RealMatrix tab = RealMatrix::Zero(m + 1, n_total + 1);
  tab.topLeftCorner(m, n_split + mi) = rows;
  tab.col(n_total).head(m) = rhs;
  for (Index k = 0; k < na; ++k) {
    tab(needs_artificial[k], n_split + mi + k) = 1.0;
    basis[needs_artificial[k]] = n_split + mi + k;
  }

  Tableau t(std::move(tab), std::move(basis), std::vector<bool>(n_total, true));

  if (max_iterations <= 0)
    max_iterations = 2000 + 50 * static_cast<int>(m) + 4 * static_cast<int>(n_total);

  LpSolution sol;
  int iterations = 0;
  Index unbounded_col = -1;

  // Phase 1: minimize the artificial sum.
  if (na > 0) {
    RealVector phase1 = RealVector::Zero(n_total);
    phase1.tail(na).setOnes();
    t.set_costs(phase1);
    const auto r = t.run(max_iterations, iterations, unbounded_col);
    sol.iterations = iterations;
    if (r == Tableau::RunResult::iteration_limit) {
      sol.status = LpSolution::Status::iteration_limit;
      return sol;
    }
    if (t.objective() > kFeasTol) {
      sol.status = LpSolution::Status::infeasible;
      return sol;
    }
    // Drive leftover artificials out of the basis where possible.
    for (Index i = 0; i < t.rows(); ++i) {
      if (t.basis()[i] < n_split + mi) continue;
      for (Index j = 0; j < n_split + mi; ++j) {
        if (std::abs(t.entry(i, j)) > 1e-9) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }
  for (Index k = 0; k < na; ++k) t.forbid(n_split + mi + k);

  // Phase 2: minimize -(c.u - c.v).
  RealVector phase2 = RealVector::Zero(n_total);
  phase2.head(nx) = -c;
  phase2.segment(nx, nx) = c;
  t.set_costs(phase2);
  const auto r = t.run(max_iterations, iterations, unbounded_col);
  sol.iterations = iterations;

  auto extended_to_x = [&](const RealVector& ext) {
    return RealVector(ext.head(nx) - ext.segment(nx, nx));
  };

  if (r == Tableau::RunResult::iteration_limit) {
    sol.status = LpSolution::Status::iteration_limit;
    return sol;
  }
  if (r == Tableau::RunResult::unbounded) {
    RealVector dir = RealVector::Zero(n_total);
    dir[unbounded_col] = 1.0;
    for (Index i = 0; i < t.rows(); ++i)
      if (t.basis()[i] < n_total) dir[t.basis()[i]] = -t.entry(i, unbounded_col);
    sol.status = LpSolution::Status::unbounded;
    sol.ray = extended_to_x(dir);
    return sol;
  }

  RealVector ext = RealVector::Zero(n_total);
  for (Index i = 0; i < t.rows(); ++i) ext[t.basis()[i]] = t.rhs(i);
  sol.status = LpSolution::Status::optimal;
  sol.x = extended_to_x(ext);
  sol.objective = c.dot(sol.x);
  sol.alternate_optimum = t.has_alternate_optimum();
  return sol;
}

}  // namespace qinv
