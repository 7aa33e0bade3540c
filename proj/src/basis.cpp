#include "qinv/basis.hpp"

#include <cmath>

namespace qinv {

DensityMatrix::DensityMatrix(Index dim, ComplexMatrix mat) : dim_(dim), mat_(std::move(mat)) {
  if (dim_ < 2 || mat_.rows() != dim_ || mat_.cols() != dim_)
    throw std::invalid_argument("DensityMatrix: bad dimensions");
  if (max_abs(mat_ - mat_.adjoint()) > tol::hermitian)
    throw NotAState("DensityMatrix: not Hermitian");
  if (std::abs(mat_.trace() - Complex(1.0)) > tol::trace)
    throw NotAState("DensityMatrix: trace differs from one");
  if (min_hermitian_eigenvalue(mat_) < -tol::hermitian)
    throw NotAState("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::maximally_mixed(Index d) {
  return DensityMatrix(d, ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  ComplexVector v = psi.normalized();
  return DensityMatrix(v.size(), v * v.adjoint());
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

OperatorBasis gell_mann_basis(Index d) {
  if (d < 2) throw std::invalid_argument("gell_mann_basis: dimension must be >= 2");
  OperatorBasis basis;
  basis.dim = d;
  basis.gammas.reserve(d * d - 1);
  const double dd = static_cast<double>(d * (d - 1));
  // Diagonal generators H_k, k = 1..d-1.
  for (Index k = 1; k < d; ++k) {
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    const double c = std::sqrt(dd / static_cast<double>(k * (k + 1)));
    for (Index i = 0; i < k; ++i) h(i, i) = c;
    h(k, k) = -c * static_cast<double>(k);
    basis.gammas.push_back(std::move(h));
  }
  // Off-diagonal pairs X_ij, Y_ij for i < j.
  const double c = std::sqrt(dd / 2.0);
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      ComplexMatrix x = ComplexMatrix::Zero(d, d);
      x(i, j) = c;
      x(j, i) = c;
      basis.gammas.push_back(std::move(x));
      ComplexMatrix y = ComplexMatrix::Zero(d, d);
      y(i, j) = Complex(0.0, -c);
      y(j, i) = Complex(0.0, c);
      basis.gammas.push_back(std::move(y));
    }
  }
  return basis;
}

BlochVector bloch_from_state(const DensityMatrix& rho, const OperatorBasis& basis) {
  const Index d = rho.dim();
  if (basis.dim != d) throw std::invalid_argument("bloch_from_state: dimension mismatch");
  RealVector r(basis.size());
  for (Index i = 0; i < basis.size(); ++i) {
    r[i] = trace_product(rho.mat(), basis.gammas[i]).real() / static_cast<double>(d - 1);
  }
  return {d, std::move(r)};
}

DensityMatrix state_from_bloch(const BlochVector& r, const OperatorBasis& basis) {
  const Index d = basis.dim;
  if (r.r.size() != basis.size())
    throw std::invalid_argument("state_from_bloch: component count mismatch");
  ComplexMatrix m = ComplexMatrix::Identity(d, d);
  for (Index i = 0; i < basis.size(); ++i) m += r.r[i] * basis.gammas[i];
  m /= static_cast<double>(d);
  return DensityMatrix(d, std::move(m));  // throws NotAState on negative eigenvalues
}

}  // namespace qinv
