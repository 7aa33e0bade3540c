#include "qinv/constructors.hpp"

#include <cmath>
#include <numbers>

namespace qinv {

namespace {

void check_probability_vector(const std::vector<double>& p) {
  double sum = 0.0;
  for (double x : p) {
    if (x < -1e-12) throw std::invalid_argument("weights must be nonnegative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-10) throw std::invalid_argument("weights must sum to one");
}

void check_is_channel(const ChannelRep& rep, const std::string& name) {
  const ValidationReport v = validate_channel(rep.to_choi());
  if (!v.cp || !v.tp)
    throw std::logic_error(name + ": constructed map failed channel validation (min_eig=" +
                           std::to_string(v.min_eig) +
                           ", tp_residual=" + std::to_string(v.tp_residual) + ")");
}

ConstructorTag scalar_tag(std::string name, std::map<std::string, double> scalars) {
  ConstructorTag t;
  t.name = std::move(name);
  t.scalars = std::move(scalars);
  return t;
}

}  // namespace

Superoperator ChannelRep::to_superop() const {
  switch (form) {
    case Form::superop:
      return std::get<Superoperator>(data);
    case Form::kraus:
      return kraus_to_superop(std::get<KrausSet>(data));
    case Form::choi:
      return choi_to_superop(std::get<ChoiMatrix>(data));
    case Form::affine:
      return affine_to_superop(std::get<AffinePair>(data), gell_mann_basis(dim));
  }
  throw std::logic_error("ChannelRep: bad form");
}

ChoiMatrix ChannelRep::to_choi() const {
  if (form == Form::choi) return std::get<ChoiMatrix>(data);
  return superop_to_choi(to_superop());
}

ChannelRep make_channel(Superoperator phi) {
  return {phi.dim, ChannelRep::Form::superop, std::move(phi), std::nullopt};
}
ChannelRep make_channel(KrausSet k) {
  const Index d = k.dim();
  return {d, ChannelRep::Form::kraus, std::move(k), std::nullopt};
}
ChannelRep make_channel(ChoiMatrix c) {
  return {c.dim, ChannelRep::Form::choi, std::move(c), std::nullopt};
}
ChannelRep make_channel(AffinePair a) {
  return {a.dim, ChannelRep::Form::affine, std::move(a), std::nullopt};
}

std::array<ComplexMatrix, 4> pauli_matrices() {
  ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  return {id, x, y, z};
}

std::array<ComplexMatrix, 3> spin_operators(double j) {
  const double twice_j = 2.0 * j;
  if (j <= 0 || std::abs(twice_j - std::round(twice_j)) > 1e-12)
    throw std::invalid_argument("spin_operators: j must be a positive half-integer");
  const Index d = static_cast<Index>(std::llround(twice_j)) + 1;
  ComplexMatrix jz = ComplexMatrix::Zero(d, d);
  ComplexMatrix jplus = ComplexMatrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) {
    const double m = j - static_cast<double>(k);
    jz(k, k) = m;
    if (k > 0) jplus(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const ComplexMatrix jminus = jplus.adjoint();
  ComplexMatrix jx = 0.5 * (jplus + jminus);
  ComplexMatrix jy = Complex(0, -0.5) * (jplus - jminus);
  return {jx, jy, jz};
}

ChannelRep depolarizing(Index d, double q) {
  if (d < 2) throw std::invalid_argument("depolarizing: dimension must be >= 2");
  if (q < 0.0 || q > 1.0)
    throw std::invalid_argument("depolarizing: need 0 <= q <= 1, got q=" + std::to_string(q));
  const ComplexVector phi_plus = max_entangled(d);
  ComplexMatrix phi = (1.0 - q) * ComplexMatrix::Identity(d * d, d * d) +
                      q * (phi_plus * phi_plus.adjoint());
  ChannelRep rep = make_channel(Superoperator{d, std::move(phi)});
  rep.tag = scalar_tag("depolarizing", {{"d", static_cast<double>(d)}, {"q", q}});
  return rep;
}

ChannelRep transverse_depolarizing(Index d, double w) {
  if (d < 2) throw std::invalid_argument("transverse_depolarizing: dimension must be >= 2");
  const double lo = static_cast<double>(d) / (d + 1), hi = static_cast<double>(d) / (d - 1);
  if (w < lo - 1e-12 || w > hi + 1e-12)
    throw std::invalid_argument("transverse_depolarizing: complete positivity requires d/(d+1) <= w <= d/(d-1), got w=" +
                                std::to_string(w) + " for d=" + std::to_string(d));
  // rho -> (1-w) rho^T + (w/d) Tr(rho) I; vec(rho^T) = S vec(rho) and the
  // trace term vectorizes to |I><I|/d = |phi+><phi+|.
  const ComplexVector phi_plus = max_entangled(d);
  ComplexMatrix phi = (1.0 - w) * swap_operator(d) + w * (phi_plus * phi_plus.adjoint());
  ChannelRep rep = make_channel(Superoperator{d, std::move(phi)});
  rep.tag = scalar_tag("transverse_depolarizing", {{"d", static_cast<double>(d)}, {"w", w}});
  check_is_channel(rep, "transverse_depolarizing");
  return rep;
}

ChannelRep e_plus_channel(Index d) {
  return transverse_depolarizing(d, static_cast<double>(d) / (d + 1));
}

ChannelRep e_minus_channel(Index d) {
  return transverse_depolarizing(d, static_cast<double>(d) / (d - 1));
}

ChannelRep pauli_channel(const std::array<double, 4>& p) {
  check_probability_vector({p.begin(), p.end()});
  const auto sigma = pauli_matrices();
  std::vector<ComplexMatrix> ops;
  for (int i = 0; i < 4; ++i)
    if (p[i] > 0.0) ops.push_back(std::sqrt(p[i]) * sigma[i]);
  ChannelRep rep = make_channel(KrausSet(2, std::move(ops)));
  rep.tag = scalar_tag("pauli", {{"p0", p[0]}, {"p1", p[1]}, {"p2", p[2]}, {"p3", p[3]}});
  return rep;
}

ChannelRep mixed_unitary(const std::vector<double>& weights,
                         const std::vector<ComplexMatrix>& unitaries) {
  if (weights.size() != unitaries.size() || weights.empty())
    throw std::invalid_argument("mixed_unitary: need matching nonempty weights and unitaries");
  check_probability_vector(weights);
  const Index d = unitaries.front().rows();
  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const ComplexMatrix& u = unitaries[i];
    if (u.rows() != d || u.cols() != d)
      throw std::invalid_argument("mixed_unitary: unitary size mismatch");
    if (max_abs(u.adjoint() * u - ComplexMatrix::Identity(d, d)) > 1e-8)
      throw std::invalid_argument("mixed_unitary: matrix " + std::to_string(i) + " is not unitary");
    if (weights[i] > 0.0) ops.push_back(std::sqrt(weights[i]) * u);
  }
  ChannelRep rep = make_channel(KrausSet(d, std::move(ops)));
  ConstructorTag t;
  t.name = "mixed_unitary";
  t.vectors["weights"] = weights;
  rep.tag = std::move(t);
  return rep;
}

ChannelRep landau_streater(double j) {
  const auto spin = spin_operators(j);
  const double scale = 1.0 / std::sqrt(j * (j + 1));
  std::vector<ComplexMatrix> ops;
  for (const auto& ji : spin) ops.push_back(scale * ji);
  const Index d = spin[0].rows();
  ChannelRep rep = make_channel(KrausSet(d, std::move(ops)));
  rep.tag = scalar_tag("landau_streater", {{"j", j}});
  check_is_channel(rep, "landau_streater");
  return rep;
}

ChannelRep orthogonal_conjugations(const std::vector<ComplexMatrix>& x_ops) {
  if (x_ops.empty()) throw std::invalid_argument("orthogonal_conjugations: no operators");
  const Index d = x_ops.front().rows();
  const double q = static_cast<double>(x_ops.size());
  ComplexMatrix left = ComplexMatrix::Zero(d, d), right = ComplexMatrix::Zero(d, d);
  for (const auto& x : x_ops) {
    if (x.rows() != d || x.cols() != d)
      throw std::invalid_argument("orthogonal_conjugations: size mismatch");
    left += x.adjoint() * x;
    right += x * x.adjoint();
  }
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  if (max_abs(left - id) > 1e-8 || max_abs(right - id) > 1e-8)
    throw std::invalid_argument(
        "orthogonal_conjugations: operators do not resolve the identity on both sides");
  for (std::size_t a = 0; a < x_ops.size(); ++a)
    for (std::size_t b = 0; b < x_ops.size(); ++b) {
      const Complex g = (x_ops[a].adjoint() * x_ops[b]).trace();
      const Complex want = (a == b) ? Complex(static_cast<double>(d) / q) : Complex(0.0);
      if (std::abs(g - want) > 1e-8)
        throw std::invalid_argument(
            "orthogonal_conjugations: operators violate Tr(X_a^dag X_b) = (d/q) delta_ab");
    }
  ChannelRep rep = make_channel(KrausSet(d, x_ops));
  rep.tag = scalar_tag("orthogonal_conjugations", {{"q", q}});
  return rep;
}

ChannelRep stretch_channel(Index d1, Index d2, Index m1, Index m2) {
  if (d1 < 1 || d2 < 1 || m1 < 1 || m2 < 1 || d1 + d2 != m1 + m2)
    throw std::invalid_argument("stretch_channel: need d1+d2 == m1+m2 with positive ranks");
  const Index d = d1 + d2;
  // Measurement basis: discrete Fourier rotation of the computational basis,
  // so the measured projectors are generically oriented relative to the
  // prepared ones while only the ranks matter.
  ComplexMatrix fourier(d, d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(a * b) / static_cast<double>(d);
      fourier(a, b) = c * Complex(std::cos(angle), std::sin(angle));
    }
  std::vector<ComplexMatrix> ops;
  const double s1 = 1.0 / std::sqrt(static_cast<double>(d1));
  const double s2 = 1.0 / std::sqrt(static_cast<double>(d2));
  for (Index i = 0; i < d1; ++i)
    for (Index a = 0; a < m1; ++a) {
      ComplexMatrix k = ComplexMatrix::Zero(d, d);
      k.row(i) = s1 * fourier.col(a).adjoint();
      ops.push_back(std::move(k));
    }
  for (Index i = d1; i < d; ++i)
    for (Index a = m1; a < d; ++a) {
      ComplexMatrix k = ComplexMatrix::Zero(d, d);
      k.row(i) = s2 * fourier.col(a).adjoint();
      ops.push_back(std::move(k));
    }
  ChannelRep rep = make_channel(KrausSet(d, std::move(ops)));
  rep.tag = scalar_tag("stretch", {{"d1", static_cast<double>(d1)},
                                   {"d2", static_cast<double>(d2)},
                                   {"m1", static_cast<double>(m1)},
                                   {"m2", static_cast<double>(m2)}});
  check_is_channel(rep, "stretch_channel");
  return rep;
}

ChannelRep spin1_dephasing(const std::vector<std::pair<double, double>>& tau_points) {
  std::vector<double> weights;
  std::vector<std::vector<double>> phases;
  for (const auto& [tau, p] : tau_points) {
    weights.push_back(p);
    phases.push_back({tau, 0.0, -tau});
  }
  ChannelRep rep = commuting_unitary_mixture(weights, phases);
  ConstructorTag t;
  t.name = "spin1_dephasing";
  for (const auto& [tau, p] : tau_points) {
    t.vectors["taus"].push_back(tau);
    t.vectors["probs"].push_back(p);
  }
  rep.tag = std::move(t);
  return rep;
}

ChannelRep commuting_unitary_mixture(const std::vector<double>& weights,
                                     const std::vector<std::vector<double>>& phases) {
  if (weights.size() != phases.size() || weights.empty())
    throw std::invalid_argument("commuting_unitary_mixture: need matching weights and phases");
  check_probability_vector(weights);
  const Index d = static_cast<Index>(phases.front().size());
  std::vector<ComplexMatrix> unitaries;
  for (const auto& theta : phases) {
    if (static_cast<Index>(theta.size()) != d)
      throw std::invalid_argument("commuting_unitary_mixture: phase vector length mismatch");
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    for (Index i = 0; i < d; ++i) u(i, i) = Complex(std::cos(theta[i]), std::sin(theta[i]));
    unitaries.push_back(std::move(u));
  }
  ChannelRep rep = mixed_unitary(weights, unitaries);
  ConstructorTag t;
  t.name = "commuting_unitary";
  t.vectors["weights"] = weights;
  t.phase_rows = phases;
  rep.tag = std::move(t);
  return rep;
}

ComplexMatrix dephasing_weight_matrix(const std::vector<double>& weights,
                                      const std::vector<std::vector<double>>& phases) {
  if (weights.size() != phases.size() || weights.empty())
    throw std::invalid_argument("dephasing_weight_matrix: need matching weights and phases");
  const Index d = static_cast<Index>(phases.front().size());
  ComplexMatrix w = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        const double delta = phases[k][i] - phases[k][j];
        w(i, j) += weights[k] * Complex(std::cos(delta), std::sin(delta));
      }
  }
  return w;
}

}  // namespace qinv
