#include "qinv/linalg.hpp"

#include <cmath>

namespace qinv {

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tolerance;
}

ComplexVector vec(const ComplexMatrix& a) {
  const Index d = a.rows();
  ComplexVector v(d * a.cols());
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < a.cols(); ++j) v[i * a.cols() + j] = a(i, j);
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, Index d) {
  ComplexMatrix a(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) a(i, j) = v[i * d + j];
  return a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix swap_operator(Index d) {
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) s(flat(i, j, d), flat(j, i, d)) = 1.0;
  return s;
}

ComplexVector max_entangled(Index d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index i = 0; i < d; ++i) v[flat(i, i, d)] = c;
  return v;
}

ComplexMatrix reshuffle(const ComplexMatrix& a, Index d) {
  ComplexMatrix out(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        for (Index l = 0; l < d; ++l)
          out(flat(i, j, d), flat(k, l, d)) = a(flat(i, k, d), flat(j, l, d));
  return out;
}

ComplexMatrix trace_out_first(const ComplexMatrix& a, Index d) {
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) out(i, j) += a(flat(k, i, d), flat(k, j, d));
  return out;
}

ComplexMatrix trace_out_second(const ComplexMatrix& a, Index d) {
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) out(i, j) += a(flat(i, k, d), flat(j, k, d));
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_hermitian_eigenvalue(const ComplexMatrix& a) {
  return hermitian_eigenvalues(a).minCoeff();
}

double max_hermitian_eigenvalue(const ComplexMatrix& a) {
  return hermitian_eigenvalues(a).maxCoeff();
}

ComplexMatrix polar_unitary(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Pairs the (p,q) and (q,p) terms so the sum is symmetric in its arguments.
  const Index n = a.rows();
  Complex sum = 0.0;
  for (Index p = 0; p < n; ++p) {
    sum += a(p, p) * b(p, p);
    for (Index q = p + 1; q < n; ++q) sum += a(p, q) * b(q, p) + a(q, p) * b(p, q);
  }
  return sum;
}

double real_or_throw(Complex z, double tolerance, const std::string& what) {
  if (std::abs(z.imag()) > tolerance)
    throw std::runtime_error(what + ": unexpected imaginary part " + std::to_string(z.imag()));
  return z.real();
}

}  // namespace qinv
