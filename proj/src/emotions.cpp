#include "humor/emotions.hpp"

#include <stdexcept>

namespace humor {

double simonov(double need, double info, double baseline) {
  if (need < 0.0) throw std::invalid_argument("need must be nonnegative");
  return need * (info - baseline);
}

EmotionSample sample_emotions(double best_per_symbol,
                              std::optional<double> runner_up_per_symbol,
                              const EmotionConfig& cfg) {
  EmotionSample sample;
  sample.p_max = best_per_symbol;
  sample.p_comp = runner_up_per_symbol;
  sample.pleasure = simonov(cfg.need_n, best_per_symbol, cfg.i0_pleasure);
  if (runner_up_per_symbol) {
    sample.confidence = simonov(cfg.need_n, best_per_symbol - *runner_up_per_symbol,
                                cfg.i0_confidence);
  }
  return sample;
}

}  // namespace humor
