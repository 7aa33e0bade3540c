#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

// Shared linear-algebra conventions.
//
// Vectorization is row-major: vec(A)[i*d + j] = A(i, j), so that
// vec(K rho K^dag) = (K (x) conj(K)) vec(rho).  Bipartite indices are
// flattened as |i,j> -> i*d + j; for a Choi matrix the first (slow) index
// is the channel output and the second (fast) index is the input.

namespace qinv {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-8;
inline constexpr double tp = 1e-8;
inline constexpr double kraus_cutoff = 1e-10;
}  // namespace tol

struct NotAState : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCompletelyPositive : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotTracePreserving : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Index flat(Index i, Index j, Index d) { return i * d + j; }

// Largest absolute entry.
double max_abs(const ComplexMatrix& a);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tolerance);

ComplexVector vec(const ComplexMatrix& a);
ComplexMatrix unvec(const ComplexVector& v, Index d);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Swap operator S|i,j> = |j,i> on C^d (x) C^d.
ComplexMatrix swap_operator(Index d);

// Normalized maximally entangled vector (1/sqrt(d)) sum_i |i,i>.
ComplexVector max_entangled(Index d);

// Index permutation A^R[(i,j),(k,l)] = A[(i,k),(j,l)], an involution.
// Maps a channel superoperator to its Choi matrix and back.
ComplexMatrix reshuffle(const ComplexMatrix& a, Index d);

// Partial traces of a d^2 x d^2 bipartite matrix under the |i,j> = i*d+j
// flattening.  trace_out_first sums over the first (output) index.
ComplexMatrix trace_out_first(const ComplexMatrix& a, Index d);
ComplexMatrix trace_out_second(const ComplexMatrix& a, Index d);

// Eigenvalues of a Hermitian matrix, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& a);
double min_hermitian_eigenvalue(const ComplexMatrix& a);
double max_hermitian_eigenvalue(const ComplexMatrix& a);

// Unitary factor of the polar decomposition (via SVD).
ComplexMatrix polar_unitary(const ComplexMatrix& a);

// Trace of a*b accumulated so that trace_product(a, b) == trace_product(b, a)
// bit for bit.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Real value expected: throws if |imag| exceeds the tolerance.
double real_or_throw(Complex z, double tolerance, const std::string& what);

}  // namespace qinv
