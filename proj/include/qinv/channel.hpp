#pragma once

#include <vector>

#include "qinv/basis.hpp"
#include "qinv/linalg.hpp"

namespace qinv {

// Kraus representation; trace preservation is validated on construction.
class KrausSet {
 public:
  KrausSet(Index dim, std::vector<ComplexMatrix> ops);

  Index dim() const { return dim_; }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }

 private:
  Index dim_;
  std::vector<ComplexMatrix> ops_;
};

// d^2 x d^2 matrix acting on vectorized density matrices.
struct Superoperator {
  Index dim;
  ComplexMatrix mat;
};

// d^2 x d^2 matrix normalized to Tr C = d; PSD iff the map is CP and
// Tr_out C = I iff it is trace preserving.
struct ChoiMatrix {
  Index dim;
  ComplexMatrix mat;
};

// Affine action r -> M r + t on generalized Bloch vectors.
struct AffinePair {
  Index dim;
  RealMatrix distortion;    // (d^2-1) x (d^2-1)
  RealVector translation;   // length d^2-1
};

struct ValidationReport {
  double min_eig = 0.0;      // smallest Choi eigenvalue
  double tp_residual = 0.0;  // || Tr_out C - I ||_max
  double trace = 0.0;        // Tr C
  bool cp = false;
  bool tp = false;
};

Superoperator kraus_to_superop(const KrausSet& k);
ChoiMatrix superop_to_choi(const Superoperator& phi);
Superoperator choi_to_superop(const ChoiMatrix& c);

// Eigendecomposition construction; eigenvalues below the cutoff are dropped.
// Throws NotCompletelyPositive when the Choi matrix has an eigenvalue below
// -tol::psd.
KrausSet choi_to_kraus(const ChoiMatrix& c, double cutoff = tol::kraus_cutoff);

ChoiMatrix kraus_to_choi(const KrausSet& k);
KrausSet superop_to_kraus(const Superoperator& phi);

// M_ij = Tr(G_i E(G_j)) / (d(d-1)), t_i = Tr(G_i E(I)) / (d(d-1)).
// Throws NotTracePreserving when the map is not trace preserving.
AffinePair superop_to_affine(const Superoperator& phi, const OperatorBasis& basis);
Superoperator affine_to_superop(const AffinePair& a, const OperatorBasis& basis);

// Superoperator of E2 o E1 (E1 applied first).
Superoperator compose(const Superoperator& phi2, const Superoperator& phi1);

// Superoperator of E1 (x) E2 on dimension d1*d2 with |a1,a2> -> a1*d2 + a2.
Superoperator tensor_product(const Superoperator& phi1, const Superoperator& phi2);
ChoiMatrix tensor_product(const ChoiMatrix& c1, const ChoiMatrix& c2);

// unvec(Phi vec(rho)); the output is validated as a state and failures are
// reported as NotCompletelyPositive (a CPT map cannot produce them).
DensityMatrix apply_channel(const Superoperator& phi, const DensityMatrix& rho);

// Raw action without state validation, for maps that are not channels.
ComplexMatrix apply_superop(const Superoperator& phi, const ComplexMatrix& rho);

ValidationReport validate_channel(const ChoiMatrix& c);

Superoperator identity_superop(Index d);
ChoiMatrix identity_choi(Index d);
// Choi of the completely depolarizing channel, (1/d) I (x) I.
ChoiMatrix depolarized_choi(Index d);
Superoperator unitary_superop(const ComplexMatrix& u);

}  // namespace qinv
