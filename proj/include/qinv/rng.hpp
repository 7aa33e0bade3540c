#pragma once

#include <cstdint>

#include "qinv/linalg.hpp"

namespace qinv {

// Counter-based generator: the output stream is splitmix64(key + n*golden)
// for n = 0, 1, 2, ...  Substreams are derived by rekeying, so sample k of
// an experiment can be generated independently of samples 0..k-1 and the
// serial and parallel runs of an ensemble agree.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(seed) {}

  // Independent child stream; deterministic in (key, index).
  CounterRng substream(std::uint64_t index) const;

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  // Uniform on (0, 1].
  double uniform_positive();
  // Standard normal via Box-Muller.
  double normal();
  // Unit-rate exponential.
  double exponential();
  // Standard complex normal (independent N(0,1) real and imaginary parts).
  Complex normal_complex();

  ComplexMatrix ginibre(Index rows, Index cols);
  // Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
  ComplexMatrix haar_unitary(Index d);
  // Haar-random pure state as a normalized complex Gaussian vector.
  ComplexVector haar_state(Index d);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace qinv
