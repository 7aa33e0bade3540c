#include "qinv/rng.hpp"

#include <cmath>
#include <numbers>

namespace qinv {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng CounterRng::substream(std::uint64_t index) const {
  return CounterRng(splitmix64(key_ ^ splitmix64(index + 0x632BE59BD9B4E019ull)));
}

std::uint64_t CounterRng::next_u64() { return splitmix64(key_ + kGolden * counter_++); }

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::uniform_positive() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double CounterRng::normal() {
  if (have_cached_normal_) {
    have_cached_normal_ = false;
    return cached_normal_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform_positive()));
  const double theta = 2.0 * std::numbers::pi * uniform();
  cached_normal_ = r * std::sin(theta);
  have_cached_normal_ = true;
  return r * std::cos(theta);
}

double CounterRng::exponential() { return -std::log(uniform_positive()); }

Complex CounterRng::normal_complex() {
  const double re = normal();
  return {re, normal()};
}

ComplexMatrix CounterRng::ginibre(Index rows, Index cols) {
  ComplexMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) g(i, j) = normal_complex();
  return g;
}

ComplexMatrix CounterRng::haar_unitary(Index d) {
  const ComplexMatrix g = ginibre(d, d);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0 ? rjj / a : Complex(1.0, 0.0));
  }
  return q;
}

ComplexVector CounterRng::haar_state(Index d) {
  ComplexVector v(d);
  for (Index i = 0; i < d; ++i) v[i] = normal_complex();
  v.normalize();
  return v;
}

}  // namespace qinv
