#pragma once

#include <cstdint>

#include "qinv/channel.hpp"

namespace qinv {

struct FidelityReport {
  double avg_fidelity = 0.0;
  double ent_fidelity = 0.0;
  double trace_phi = 0.0;
};

// Bounds (f+1)/(d+1) <= F(corrected) <= (p_max+1)/(d+1) on the corrected
// average fidelity, where f is the fully entangled fraction of the Choi
// matrix and p_max its largest eigenvalue.  fef is a certified lower bound
// produced by local refinement; fef_witness is the unitary achieving it.
struct BoundCertificate {
  double lower = 0.0;
  double upper = 0.0;
  double p_max = 0.0;
  double fef = 0.0;
  ComplexMatrix fef_witness;
};

struct FefOptions {
  int restarts = 20;
  int iters = 500;
  double convergence = 1e-9;
  std::uint64_t seed = 0;
};

// (d + Re Tr Phi) / (d (d+1)).
double avg_fidelity(const Superoperator& phi);

// Tr Phi / d^2 = (1/d^2) sum_a |Tr K_a|^2.
double entanglement_fidelity(const Superoperator& phi);

FidelityReport fidelity_report(const Superoperator& phi);

// Average fidelity of E' o E, (1 + Re Tr(Phi' Phi)/d) / (d+1); exactly
// symmetric in its arguments.
double corrected_fidelity(const Superoperator& phi_prime, const Superoperator& phi);

// Maximizes <beta|C|beta> over maximally entangled |beta> = (U (x) I)|phi+>.
// Returns the best value and the witness U.  Monotone in the restart count
// for a fixed seed.
std::pair<double, ComplexMatrix> fully_entangled_fraction(const ChoiMatrix& c,
                                                          const FefOptions& opts = {});

BoundCertificate fidelity_bounds(const ChoiMatrix& c, const FefOptions& opts = {});

// -log2(d * fe_corrected); fe_corrected must be positive.
double min_entropy_of_channel(double fe_corrected, Index d);

// Tr((C/d)^2); equals 1 iff the channel is unitary.
double jamiolkowski_purity(const ChoiMatrix& c);

// 1 - |t|^2.
double unitality(const AffinePair& affine);

}  // namespace qinv
