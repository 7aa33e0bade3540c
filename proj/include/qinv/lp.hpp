#pragma once

#include "qinv/linalg.hpp"

namespace qinv {

// Dense two-phase tableau simplex for the small LPs produced by the
// cutting-plane solver:
//
//   maximize c.x   subject to   a_eq x = b_eq,  a_in x >= b_in,  x free.
//
// Free variables are split internally.  When the LP is unbounded the
// improving ray direction is returned so the caller can cut it off.
struct LpSolution {
  enum class Status { optimal, infeasible, unbounded, iteration_limit };

  Status status = Status::optimal;
  RealVector x;
  double objective = 0.0;
  RealVector ray;
  int iterations = 0;
  // A nonbasic column with zero reduced cost and a strictly positive step
  // exists at the optimum, so another optimal vertex is reachable.
  bool alternate_optimum = false;
};

LpSolution solve_lp(const RealMatrix& a_eq, const RealVector& b_eq, const RealMatrix& a_in,
                    const RealVector& b_in, const RealVector& c, int max_iterations = 0);

}  // namespace qinv
