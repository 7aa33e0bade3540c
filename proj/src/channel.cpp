#include "qinv/channel.hpp"

#include <cmath>

namespace qinv {

KrausSet::KrausSet(Index dim, std::vector<ComplexMatrix> ops) : dim_(dim), ops_(std::move(ops)) {
  if (dim_ < 2) throw std::invalid_argument("KrausSet: dimension must be >= 2");
  if (ops_.empty()) throw std::invalid_argument("KrausSet: no operators");
  ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& k : ops_) {
    if (k.rows() != dim_ || k.cols() != dim_)
      throw std::invalid_argument("KrausSet: operator size mismatch");
    sum += k.adjoint() * k;
  }
  if (max_abs(sum - ComplexMatrix::Identity(dim_, dim_)) > tol::tp)
    throw NotTracePreserving("KrausSet: sum K^dag K differs from identity");
}

Superoperator kraus_to_superop(const KrausSet& k) {
  const Index d = k.dim();
  ComplexMatrix phi = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& op : k.ops()) phi += kron(op, op.conjugate());
  return {d, std::move(phi)};
}

ChoiMatrix superop_to_choi(const Superoperator& phi) {
  return {phi.dim, reshuffle(phi.mat, phi.dim)};
}

Superoperator choi_to_superop(const ChoiMatrix& c) { return {c.dim, reshuffle(c.mat, c.dim)}; }

KrausSet choi_to_kraus(const ChoiMatrix& c, double cutoff) {
  const Index d = c.dim;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c.mat);
  if (es.eigenvalues().minCoeff() < -tol::psd)
    throw NotCompletelyPositive("choi_to_kraus: Choi matrix has negative eigenvalue " +
                                std::to_string(es.eigenvalues().minCoeff()));
  std::vector<ComplexMatrix> ops;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lambda = es.eigenvalues()[i];
    if (lambda <= cutoff) continue;
    ops.push_back(std::sqrt(lambda) * unvec(es.eigenvectors().col(i), d));
  }
  return KrausSet(d, std::move(ops));
}

ChoiMatrix kraus_to_choi(const KrausSet& k) { return superop_to_choi(kraus_to_superop(k)); }

KrausSet superop_to_kraus(const Superoperator& phi) { return choi_to_kraus(superop_to_choi(phi)); }

AffinePair superop_to_affine(const Superoperator& phi, const OperatorBasis& basis) {
  const Index d = phi.dim;
  if (basis.dim != d) throw std::invalid_argument("superop_to_affine: dimension mismatch");
  const Index n = basis.size();
  const double norm = static_cast<double>(d * (d - 1));

  const ComplexMatrix e_of_id = apply_superop(phi, ComplexMatrix::Identity(d, d));
  if (std::abs(e_of_id.trace() - Complex(static_cast<double>(d))) > tol::tp * d)
    throw NotTracePreserving("superop_to_affine: map does not preserve the trace");

  AffinePair out{d, RealMatrix(n, n), RealVector(n)};
  for (Index i = 0; i < n; ++i)
    out.translation[i] = trace_product(basis.gammas[i], e_of_id).real() / norm;
  for (Index j = 0; j < n; ++j) {
    const ComplexMatrix e_of_gamma = apply_superop(phi, basis.gammas[j]);
    if (std::abs(e_of_gamma.trace()) > tol::tp * d)
      throw NotTracePreserving("superop_to_affine: map does not preserve the trace");
    for (Index i = 0; i < n; ++i)
      out.distortion(i, j) = trace_product(basis.gammas[i], e_of_gamma).real() / norm;
  }
  return out;
}

Superoperator affine_to_superop(const AffinePair& a, const OperatorBasis& basis) {
  const Index d = a.dim;
  if (basis.dim != d) throw std::invalid_argument("affine_to_superop: dimension mismatch");
  const Index n = basis.size();
  // Columns of v are the orthonormal vectorized basis {I/sqrt(d), G_i/sqrt(d(d-1))}.
  ComplexMatrix v(d * d, n + 1);
  v.col(0) = vec(ComplexMatrix::Identity(d, d)) / std::sqrt(static_cast<double>(d));
  const double gnorm = std::sqrt(static_cast<double>(d * (d - 1)));
  for (Index i = 0; i < n; ++i) v.col(i + 1) = vec(basis.gammas[i]) / gnorm;

  ComplexMatrix block = ComplexMatrix::Zero(n + 1, n + 1);
  block(0, 0) = 1.0;
  const double s = std::sqrt(static_cast<double>(d - 1));
  for (Index i = 0; i < n; ++i) {
    block(i + 1, 0) = s * a.translation[i];
    for (Index j = 0; j < n; ++j) block(i + 1, j + 1) = a.distortion(i, j);
  }
  return {d, v * block * v.adjoint()};
}

Superoperator compose(const Superoperator& phi2, const Superoperator& phi1) {
  if (phi1.dim != phi2.dim) throw std::invalid_argument("compose: dimension mismatch");
  return {phi1.dim, phi2.mat * phi1.mat};
}

Superoperator tensor_product(const Superoperator& phi1, const Superoperator& phi2) {
  const Index d1 = phi1.dim, d2 = phi2.dim, d = d1 * d2;
  ComplexMatrix out(d * d, d * d);
  for (Index a1 = 0; a1 < d1; ++a1)
    for (Index b1 = 0; b1 < d1; ++b1)
      for (Index i1 = 0; i1 < d1; ++i1)
        for (Index j1 = 0; j1 < d1; ++j1) {
          const Complex f1 = phi1.mat(flat(a1, b1, d1), flat(i1, j1, d1));
          for (Index a2 = 0; a2 < d2; ++a2)
            for (Index b2 = 0; b2 < d2; ++b2)
              for (Index i2 = 0; i2 < d2; ++i2)
                for (Index j2 = 0; j2 < d2; ++j2) {
                  out(flat(a1 * d2 + a2, b1 * d2 + b2, d), flat(i1 * d2 + i2, j1 * d2 + j2, d)) =
                      f1 * phi2.mat(flat(a2, b2, d2), flat(i2, j2, d2));
                }
        }
  return {d, std::move(out)};
}

ChoiMatrix tensor_product(const ChoiMatrix& c1, const ChoiMatrix& c2) {
  return superop_to_choi(tensor_product(choi_to_superop(c1), choi_to_superop(c2)));
}

ComplexMatrix apply_superop(const Superoperator& phi, const ComplexMatrix& rho) {
  return unvec(phi.mat * vec(rho), phi.dim);
}

DensityMatrix apply_channel(const Superoperator& phi, const DensityMatrix& rho) {
  if (phi.dim != rho.dim()) throw std::invalid_argument("apply_channel: dimension mismatch");
  ComplexMatrix out = apply_superop(phi, rho.mat());
  try {
    return DensityMatrix(phi.dim, std::move(out));
  } catch (const NotAState& e) {
    throw NotCompletelyPositive(std::string("apply_channel: output is not a state (") + e.what() +
                                "); the map is not a CPT channel");
  }
}

ValidationReport validate_channel(const ChoiMatrix& c) {
  ValidationReport r;
  r.min_eig = min_hermitian_eigenvalue(c.mat);
  r.tp_residual =
      max_abs(trace_out_first(c.mat, c.dim) - ComplexMatrix::Identity(c.dim, c.dim));
  r.trace = c.mat.trace().real();
  r.cp = r.min_eig >= -tol::psd;
  r.tp = r.tp_residual <= tol::tp;
  return r;
}

Superoperator identity_superop(Index d) { return {d, ComplexMatrix::Identity(d * d, d * d)}; }

ChoiMatrix identity_choi(Index d) {
  const ComplexVector phi_plus = max_entangled(d);
  return {d, static_cast<double>(d) * (phi_plus * phi_plus.adjoint())};
}

ChoiMatrix depolarized_choi(Index d) {
  return {d, ComplexMatrix::Identity(d * d, d * d) / static_cast<double>(d)};
}

Superoperator unitary_superop(const ComplexMatrix& u) {
  return {u.rows(), kron(u, u.conjugate())};
}

}  // namespace qinv
