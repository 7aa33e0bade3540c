#pragma once

#include <vector>

#include "qinv/linalg.hpp"

namespace qinv {

// Hermitian unit-trace positive matrix; validated on construction.
class DensityMatrix {
 public:
  DensityMatrix(Index dim, ComplexMatrix mat);

  Index dim() const { return dim_; }
  const ComplexMatrix& mat() const { return mat_; }

  static DensityMatrix maximally_mixed(Index d);
  static DensityMatrix pure(const ComplexVector& psi);

  double purity() const;

 private:
  Index dim_;
  ComplexMatrix mat_;
};

// Traceless Hermitian basis normalized to Tr(G_i G_j) = d(d-1) delta_ij,
// with the d-1 diagonal generators first so that classical (diagonal)
// channels occupy the leading block of the distortion matrix.
struct OperatorBasis {
  Index dim;
  std::vector<ComplexMatrix> gammas;

  Index size() const { return static_cast<Index>(gammas.size()); }
};

struct BlochVector {
  Index dim;
  RealVector r;
};

// Generalized Gell-Mann basis of dimension d >= 2: diagonal generators
// H_1..H_{d-1}, then the symmetric/antisymmetric pair for each i < j.
OperatorBasis gell_mann_basis(Index d);

// r_i = Tr(rho Gamma_i) / (d - 1).
BlochVector bloch_from_state(const DensityMatrix& rho, const OperatorBasis& basis);

// rho = (I + r . Gamma) / d; throws NotAState when positivity fails.
DensityMatrix state_from_bloch(const BlochVector& r, const OperatorBasis& basis);

}  // namespace qinv
