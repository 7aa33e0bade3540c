#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qinv/channel.hpp"

namespace qinv {

// Provenance of a constructed channel, kept so files written by the CLI can
// be re-dispatched to the matching closed-form quasi-inverse solver.
struct ConstructorTag {
  std::string name;
  std::map<std::string, double> scalars;
  std::map<std::string, std::vector<double>> vectors;
  std::vector<std::vector<double>> phase_rows;  // commuting-unitary phase vectors
};

// A channel in one of the four interconvertible representations.
struct ChannelRep {
  enum class Form { superop, kraus, choi, affine };

  Index dim;
  Form form;
  std::variant<Superoperator, KrausSet, ChoiMatrix, AffinePair> data;
  std::optional<ConstructorTag> tag;

  Superoperator to_superop() const;
  ChoiMatrix to_choi() const;
};

ChannelRep make_channel(Superoperator phi);
ChannelRep make_channel(KrausSet k);
ChannelRep make_channel(ChoiMatrix c);
ChannelRep make_channel(AffinePair a);

std::array<ComplexMatrix, 4> pauli_matrices();

// Spin operators {J_x, J_y, J_z} in dimension 2j+1.
std::array<ComplexMatrix, 3> spin_operators(double j);

// rho -> (1-q) rho + (q/d) Tr(rho) I, 0 <= q <= 1.
ChannelRep depolarizing(Index d, double q);

// rho -> (1-w) rho^T + (w/d) Tr(rho) I with d/(d+1) <= w <= d/(d-1).
ChannelRep transverse_depolarizing(Index d, double w);

// rho -> (Tr(rho) I + rho^T) / (d+1), the w = d/(d+1) endpoint.
ChannelRep e_plus_channel(Index d);
// rho -> (Tr(rho) I - rho^T) / (d-1), the Werner-Holevo endpoint.
ChannelRep e_minus_channel(Index d);

// Qubit Pauli channel sum p_i sigma_i rho sigma_i.
ChannelRep pauli_channel(const std::array<double, 4>& p);

ChannelRep mixed_unitary(const std::vector<double>& weights,
                         const std::vector<ComplexMatrix>& unitaries);

// sum_i J_i rho J_i / (j(j+1)) on d = 2j+1.
ChannelRep landau_streater(double j);

// Uniform mixture of conjugations rho -> sum X_a rho X_a^dag with
// sum X^dag X = sum X X^dag = I and Tr(X_a^dag X_b) = (d/q) delta_ab.
ChannelRep orthogonal_conjugations(const std::vector<ComplexMatrix>& x_ops);

// Measure-and-prepare map built from projectors of ranks (m1, m2) measured
// in a rotated basis and ranks (d1, d2) prepared in the computational basis;
// stretches the Bloch component along the measured axis when m1*m2 > d1*d2.
ChannelRep stretch_channel(Index d1, Index d2, Index m1, Index m2);

// Spin-1 random-phase evolution: mixture of diag(e^{i tau}, 1, e^{-i tau})
// over a discrete distribution {(tau_k, p_k)}.
ChannelRep spin1_dephasing(const std::vector<std::pair<double, double>>& tau_points);

// Mixture of commuting (diagonal) unitaries U_k = diag(e^{i theta_k}).
ChannelRep commuting_unitary_mixture(const std::vector<double>& weights,
                                     const std::vector<std::vector<double>>& phases);

// Dephasing weights w_ij = sum_k p_k e^{i(theta_i - theta_j)} of a
// commuting-unitary mixture; Hermitian with unit diagonal.
ComplexMatrix dephasing_weight_matrix(const std::vector<double>& weights,
                                      const std::vector<std::vector<double>>& phases);

}  // namespace qinv
