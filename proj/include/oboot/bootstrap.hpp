#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "oboot/distributions.hpp"
#include "oboot/learner.hpp"

namespace oboot {

enum class Aggregate { kMean, kMajority };

struct BootstrapConfig {
  std::uint32_t n_models = 1;
  WeightMode mode = WeightMode::kScaledPoissonOne;
  Aggregate aggregate = Aggregate::kMean;
  double interval_level = 0.1;  // alpha of the percentile interval
};

struct EnsemblePrediction {
  std::vector<double> raw;  // one score per submodel
  double point = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int votes_pos = 0;  // scores >= 0; a zero score counts positive
  int votes_neg = 0;
};

// Linear-interpolated quantile: sort ascending, position h = (N-1)*q,
// interpolate between the straddling order statistics.
double quantile(std::span<const double> values, double q);

// Point estimate plus percentile interval from the raw submodel scores.
// Mean averages; Majority votes on signs and breaks ties toward +1.
EnsemblePrediction aggregate_scores(std::vector<double> raw,
                                    const BootstrapConfig& config);

EnsemblePrediction predict_ensemble(const WeightTable& table,
                                    const Example& ex,
                                    const BootstrapConfig& config);

// The online bootstrapping reduction: each training example is presented to
// every submodel with its own importance draw Z_i = W * Poisson(1), all
// draws taken from one shared stream in submodel order. The example itself
// is parsed exactly once upstream.
class BootstrapLearner {
 public:
  using WeightSampler = std::function<double(SplitMix64&, double)>;

  BootstrapLearner(const BootstrapConfig& config,
                   const LearnerConfig& learner_config, std::uint32_t bits);

  void train_example(const Example& ex, SplitMix64& rng);

  EnsemblePrediction predict_example(const Example& ex) const;

  const WeightTable& table() const { return table_; }
  WeightTable& table() { return table_; }
  const BootstrapConfig& config() const { return config_; }

  // Replaces the importance draw; the transparency harness forces Z = 1.
  void set_weight_sampler(WeightSampler sampler);

 private:
  BootstrapConfig config_;
  WeightTable table_;
  SgdLearner learner_;
  WeightSampler sampler_;
};

}  // namespace oboot
