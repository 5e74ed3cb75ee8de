#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "oboot/parser.hpp"

namespace oboot {

// Flat 2^bits x stride array of 32-bit weights holding every submodel
// interleaved: the weights of one feature index sit in adjacent slots, one
// per submodel, so a pass over all submodels of an example stays cache-local.
class WeightTable {
 public:
  WeightTable(std::uint32_t bits, std::uint32_t n_models);

  std::uint32_t bits() const { return bits_; }
  std::uint32_t n_models() const { return n_models_; }
  std::uint32_t stride() const { return 1u << log2_stride_; }  // pow2 >= n_models
  std::size_t size() const { return weights_.size(); }         // 2^bits * stride

  std::size_t slot(std::uint32_t index, std::uint32_t submodel) const {
    return (std::size_t{index} << log2_stride_) | submodel;
  }

  float& operator[](std::size_t slot) { return weights_[slot]; }
  float operator[](std::size_t slot) const { return weights_[slot]; }

  std::span<const float> weights() const { return weights_; }
  std::span<float> weights() { return weights_; }

  // FNV-1a over the raw weight bytes.
  std::uint64_t checksum() const;

 private:
  std::uint32_t bits_;
  std::uint32_t n_models_;
  std::uint32_t log2_stride_;
  std::vector<float> weights_;
};

enum class LossKind {
  kSquared,   // 1/2 (p - y)^2; regression and the default
  kLogistic,  // ln(1 + e^-yp); labels must be -1 or +1
};

struct LearnerConfig {
  LossKind loss = LossKind::kSquared;
  double eta0 = 0.5;
  double power_t = 0.5;  // eta_t = eta0 / t^power_t
};

double loss_value(double prediction, double label, LossKind kind);
double loss_gradient(double prediction, double label, LossKind kind);

// Raw linear score of one submodel: sum of weight * value over the
// example's features. No link function.
double predict(const WeightTable& table, const Example& ex,
               std::uint32_t submodel);

// Importance-weighted SGD on the hashed features of one submodel. Owns the
// per-submodel example counters that drive the eta0 / t^power_t schedule;
// the counter advances once per presented example whether or not the
// importance is zero.
class SgdLearner {
 public:
  SgdLearner(LearnerConfig config, std::uint32_t n_models);

  // One gradient step scaled by `importance` (the bootstrap draw Z). Zero
  // importance changes no weights but still advances the schedule.
  void update(WeightTable& table, const Example& ex, std::uint32_t submodel,
              double importance);

  const LearnerConfig& config() const { return config_; }
  std::uint64_t presented(std::uint32_t submodel) const;

 private:
  LearnerConfig config_;
  std::vector<std::uint64_t> presented_;
};

}  // namespace oboot
