#include "qinv/fidelity.hpp"

#include <cmath>

#include "qinv/rng.hpp"

namespace qinv {

namespace {

// Value of the entangled overlap <beta_U|C|beta_U> = vec(U)^dag C vec(U) / d.
double overlap_value(const ComplexMatrix& c, const ComplexMatrix& u, Index d) {
  const ComplexVector v = vec(u);
  return (v.adjoint() * c * v)(0).real() / static_cast<double>(d);
}

// Ascends <beta_U|C|beta_U> by alternating maximization: the optimal U for a
// fixed gradient matrix G = unvec(C vec(U)) is its polar unitary factor.
// Each step is monotone for PSD C, so the iteration converges to a local
// maximum over the unitary group.
double refine_overlap(const ComplexMatrix& c, ComplexMatrix& u, Index d, int iters,
                      double convergence) {
  double value = overlap_value(c, u, d);
  for (int it = 0; it < iters; ++it) {
    const ComplexMatrix g = unvec(c * vec(u), d);
    ComplexMatrix next = polar_unitary(g);
    const double next_value = overlap_value(c, next, d);
    if (next_value <= value + convergence * std::max(1.0, std::abs(value))) {
      if (next_value > value) {
        u = std::move(next);
        value = next_value;
      }
      break;
    }
    u = std::move(next);
    value = next_value;
  }
  return value;
}

}  // namespace

double avg_fidelity(const Superoperator& phi) {
  const Index d = phi.dim;
  const double tr = real_or_throw(phi.mat.trace(), 1e-9, "avg_fidelity");
  return (static_cast<double>(d) + tr) / static_cast<double>(d * (d + 1));
}

double entanglement_fidelity(const Superoperator& phi) {
  const double tr = real_or_throw(phi.mat.trace(), 1e-9, "entanglement_fidelity");
  return tr / static_cast<double>(phi.dim * phi.dim);
}

FidelityReport fidelity_report(const Superoperator& phi) {
  FidelityReport r;
  r.trace_phi = real_or_throw(phi.mat.trace(), 1e-9, "fidelity_report");
  r.avg_fidelity = avg_fidelity(phi);
  r.ent_fidelity = entanglement_fidelity(phi);
  return r;
}

double corrected_fidelity(const Superoperator& phi_prime, const Superoperator& phi) {
  if (phi_prime.dim != phi.dim)
    throw std::invalid_argument("corrected_fidelity: dimension mismatch");
  const Index d = phi.dim;
  const double tr =
      real_or_throw(trace_product(phi_prime.mat, phi.mat), 1e-9, "corrected_fidelity");
  return (1.0 + tr / static_cast<double>(d)) / static_cast<double>(d + 1);
}

std::pair<double, ComplexMatrix> fully_entangled_fraction(const ChoiMatrix& c,
                                                          const FefOptions& opts) {
  const Index d = c.dim;
  CounterRng rng(opts.seed);

  // Deterministic start: closest unitary to the dominant Choi eigenvector.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c.mat);
  ComplexMatrix best_u = polar_unitary(unvec(es.eigenvectors().col(d * d - 1), d));
  double best = refine_overlap(c.mat, best_u, d, opts.iters, opts.convergence);

  for (int r = 0; r < opts.restarts; ++r) {
    CounterRng stream = rng.substream(static_cast<std::uint64_t>(r));
    ComplexMatrix u = stream.haar_unitary(d);
    const double value = refine_overlap(c.mat, u, d, opts.iters, opts.convergence);
    if (value > best) {
      best = value;
      best_u = std::move(u);
    }
  }
  return {best, best_u};
}

BoundCertificate fidelity_bounds(const ChoiMatrix& c, const FefOptions& opts) {
  BoundCertificate b;
  const Index d = c.dim;
  b.p_max = max_hermitian_eigenvalue(c.mat);
  auto [fef, witness] = fully_entangled_fraction(c, opts);
  b.fef = fef;
  b.fef_witness = std::move(witness);
  b.lower = (b.fef + 1.0) / static_cast<double>(d + 1);
  b.upper = (b.p_max + 1.0) / static_cast<double>(d + 1);
  return b;
}

double min_entropy_of_channel(double fe_corrected, Index d) {
  if (fe_corrected <= 0.0)
    throw std::invalid_argument("min_entropy_of_channel: fidelity must be positive");
  return -std::log2(static_cast<double>(d) * fe_corrected);
}

double jamiolkowski_purity(const ChoiMatrix& c) {
  const double tr = real_or_throw(trace_product(c.mat, c.mat), 1e-9, "jamiolkowski_purity");
  return tr / static_cast<double>(c.dim * c.dim);
}

double unitality(const AffinePair& affine) { return 1.0 - affine.translation.squaredNorm(); }

}  // namespace qinv
