#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace oboot {

// Counter-based splitmix64 generator. The whole draw sequence is a pure
// function of the seed; tests rely on replaying it.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0,1) with 53 bits of precision.
  double next_uniform();

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double next_gaussian();

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Cumulative Poisson(1) probabilities, cdf[k] = sum_{j<=k} e^-1 / j!.
// Twenty entries carry the distribution past double precision. The table is
// held in long double because the last two entries are closer to 1 than a
// double can resolve, and the contract requires a strictly increasing cdf.
class PoissonTable {
 public:
  static constexpr std::size_t kEntries = 20;

  PoissonTable();

  long double cdf(std::size_t k) const { return cdf_[k]; }

  // Smallest k with cdf[k] > u; clamps to 19 when u exceeds the last entry.
  int sample(double u) const;

  static const PoissonTable& instance();

 private:
  std::array<long double, kEntries> cdf_;
};

enum class WeightMode {
  kScaledPoissonOne,  // Z = W * Poisson(1); the default
  kDirectPoissonW,    // Z ~ Poisson(W); kept to demonstrate its failure mode
};

// One table lookup against a fresh uniform draw.
int sample_poisson1(SplitMix64& rng);

// Bootstrap importance draw for an example of weight W. kScaledPoissonOne
// returns W * Poisson(1), real-valued for non-integer W, and consumes one
// uniform. kDirectPoissonW returns an integer Poisson(W) sample: inversion
// by sequential search for W <= 30, a rounded normal approximation clamped
// at zero above.
double sample_weight(SplitMix64& rng, double importance, WeightMode mode);

// Exact Binom(n, 1/n) probability mass, computed in log space.
double binomial_pmf(int n, int k);

// Total variation distance between Binom(n, 1/n) and Poisson(1):
// 1/2 sum_k |pmf difference|, summing k to n plus the Poisson tail.
double binom_poisson_tv_distance(int n);

}  // namespace oboot
