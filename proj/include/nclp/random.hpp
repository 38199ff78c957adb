#pragma once

#include <cstdint>
#include <vector>

#include "nclp/matcore.hpp"

namespace nclp {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Counter-based generator: the k-th draw of stream s under seed is a pure function
/// of (seed, s, k), so streams can be consumed in any order on any thread.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform in (0, 1).
  double uniform_open();
  double normal();
  Complex complex_normal();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// i.i.d. standard complex Gaussian entries (real and imaginary parts N(0, 1/2)).
CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, CounterRng& rng);

/// Haar-distributed unitary via QR of a Ginibre matrix with phase correction.
CMatrix random_unitary(Eigen::Index n, CounterRng& rng);

/// Random density matrix W W* / tr(W W*) from a square Ginibre W (full rank a.s.).
CMatrix random_density(Eigen::Index n, CounterRng& rng);

/// Kraus operators of a random CP map on M_n.
std::vector<CMatrix> random_kraus(Eigen::Index n, int count, CounterRng& rng);

/// Kraus operators rescaled so that sum K K* = I (unital).
std::vector<CMatrix> random_unital_kraus(Eigen::Index n, int count, CounterRng& rng);

}  // namespace nclp
