#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "oboot/bootstrap.hpp"

namespace oboot {

struct Metrics {
  std::optional<double> mean_loss;   // importance-weighted; absent when no weight
  std::optional<double> error_rate;  // weighted share of sign(point) != sign(label)
  std::size_t example_count = 0;
};

// True iff the within-pass ordinal lands on the holdout period. Pure in the
// ordinal, so every pass over the same input holds out the same examples.
// Period must be at least 2.
bool is_holdout(std::size_t ordinal_in_pass, std::uint32_t period);

// Running train/holdout loss accumulators and best-pass selection state.
// Train losses are progressive: the caller records each prediction before
// the example updates the model.
class HoldoutTracker {
 public:
  explicit HoldoutTracker(std::uint32_t period = 10);

  std::uint32_t period() const { return period_; }

  void record(const Example& ex, const EnsemblePrediction& pred, bool holdout,
              LossKind kind);

  struct PassSummary {
    std::optional<double> holdout_mean;
    bool improved = false;  // strictly better than every earlier pass
    Metrics train;
    Metrics holdout;
  };

  // Closes out a pass: appends the holdout mean, reports strict improvement
  // over the best pass so far, and resets the per-pass accumulators. The
  // caller checkpoints the model when `improved` is set.
  PassSummary end_of_pass();

  double best_holdout_loss() const { return best_holdout_loss_; }
  const std::vector<double>& per_pass_holdout() const { return per_pass_holdout_; }

  Metrics train_metrics() const;
  Metrics holdout_metrics() const;

 private:
  std::uint32_t period_;
  double train_loss_sum_ = 0.0;
  double train_weight_sum_ = 0.0;
  double train_error_sum_ = 0.0;
  std::size_t train_count_ = 0;
  double holdout_loss_sum_ = 0.0;
  double holdout_weight_sum_ = 0.0;
  double holdout_error_sum_ = 0.0;
  std::size_t holdout_count_ = 0;
  double best_holdout_loss_ = std::numeric_limits<double>::infinity();
  std::vector<double> per_pass_holdout_;
};

}  // namespace oboot
