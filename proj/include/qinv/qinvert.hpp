#pragma once

#include <cstdint>
#include <vector>

#include "qinv/constructors.hpp"
#include "qinv/fidelity.hpp"
#include "qinv/lp.hpp"

namespace qinv {

struct SolverDiagnostics {
  int iterations = 0;         // cutting-plane rounds (LP solves)
  int constraints_added = 0;  // cuts beyond the seeded pool
  double final_min_eig = 0.0; // smallest Choi eigenvalue of the LP candidate
  double objective_gap = 0.0; // LP relaxation value minus realized objective
  double lp_objective = 0.0;  // value of the final LP relaxation
  bool converged = true;
  bool degenerate = false;    // multiple optima detected
  bool heuristic = false;     // analytic guarantee does not cover this input
};

struct QiResult {
  ChannelRep qi;  // canonical Choi form
  double fidelity_before = 0.0;
  double fidelity_after = 0.0;
  BoundCertificate bound;
  SolverDiagnostics solver;
};

struct LpOptions {
  double tol_psd = 1e-8;
  int max_cuts = 500;
  std::uint64_t seed = 0;
  // Reproduces the random-constraint-sampling methodology: violated
  // eigenvector cuts are replaced by batches of random cuts.
  bool random_cuts_only = false;
  int random_batch = 32;
  int max_eigvec_cuts_per_round = 4;
  bool check_degeneracy = false;
  FefOptions fef;
};

// Folded real parameterization of a Hermitian Choi candidate together with
// the trace-preservation equalities, the inequality pool and the linear
// objective Tr(C~' C) = Tr(Phi' Phi).
struct LpProblem {
  Index dim = 0;
  RealVector objective;
  RealMatrix eq_rows;
  RealVector eq_rhs;
  std::vector<ComplexVector> cut_pool;

  static LpProblem build(const ChoiMatrix& c);

  // Coefficients of Tr(F C') over the folded variables, F Hermitian.
  static RealVector functional_row(const ComplexMatrix& f);
  static ComplexMatrix unfold(const RealVector& x, Index d);
  RealMatrix cut_matrix() const;
};

// Cutting-plane linear program over trace-preserving Hermitian candidates:
// violated positivity is separated by the minimal eigenvector of the
// candidate Choi matrix until the candidate is CP within tol_psd.
QiResult quasi_inverse_lp(const Superoperator& phi, const LpOptions& opts = {});

// Best correction by a unitary channel; value is (fef+1)/(d+1) at the
// returned unitary.
std::pair<ComplexMatrix, double> best_unitary_correction(const Superoperator& phi,
                                                         int restarts = 20, int iters = 500,
                                                         std::uint64_t seed = 0);

// Closed-form solvers for the analytic families.
QiResult qi_orthogonal_mixed_unitary(const std::vector<double>& weights,
                                     const std::vector<ComplexMatrix>& unitaries);
QiResult qi_orthogonal_conjugations(const std::vector<ComplexMatrix>& x_ops);
QiResult qi_transverse_depolarizing(Index d, double w);
QiResult qi_depolarizing(Index d, double q);
QiResult qi_commuting_unitary(const std::vector<double>& weights,
                              const std::vector<std::vector<double>>& phases);

// Tensor product of two quasi-inverses (the quasi-inverse of the product).
ChannelRep qi_tensor(const QiResult& qi1, const QiResult& qi2);

// Dispatches a tagged channel to the matching closed-form solver; throws
// std::invalid_argument when no analytic family applies.
QiResult quasi_inverse_analytic(const ChannelRep& rep);

// Maximizer of <psi|W|psi> over vectors with unimodular entries (first entry
// pinned to 1): dense grid then coordinate polish.  Exact quasi-inverse
// witness for d <= 3.
std::pair<double, ComplexVector> maximize_unimodular_form(const ComplexMatrix& w,
                                                          int grid_points = 64);

}  // namespace qinv
