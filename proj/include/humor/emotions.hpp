#pragma once

#include <optional>

namespace humor {

// Baselines are per-symbol log-probabilities so they stay length-independent.
struct EmotionConfig {
  double need_n = 1.0;
  double i0_pleasure = -3.0;
  double i0_confidence = 0.0;
};

struct EmotionSample {
  double pleasure = 0.0;
  std::optional<double> confidence;  // absent when the beam holds one trajectory
  double p_max = 0.0;                // best per-symbol log-probability
  std::optional<double> p_comp;      // runner-up per-symbol log-probability
};

// E = N * (I - I0); positive iff I > I0.
double simonov(double need, double info, double baseline);

// pleasure channel reads the best per-symbol score directly; the confidence
// channel reads the best/runner-up ratio, a difference in log domain.
EmotionSample sample_emotions(double best_per_symbol,
                              std::optional<double> runner_up_per_symbol,
                              const EmotionConfig& cfg);

}  // namespace humor
