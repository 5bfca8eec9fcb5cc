#include "humor/sweep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace humor {
namespace {

double rounded(double value) { return std::stod(format_probability(value)); }

}  // namespace

SweepResult sweep_tau(const std::vector<std::vector<SymbolId>>& texts,
                      const Lexicon& lex, const BigramModel& model,
                      const std::vector<int>& grid, double alpha, double beta,
                      const DecoderConfig& base) {
  if (texts.empty()) throw std::invalid_argument("empty corpus");
  if (grid.empty()) throw std::invalid_argument("empty tau grid");
  if (!std::is_sorted(grid.begin(), grid.end()) ||
      std::adjacent_find(grid.begin(), grid.end()) != grid.end())
    throw std::invalid_argument("tau grid must be strictly increasing");
  if (alpha < 0.0 || beta < 0.0)
    throw std::invalid_argument("alpha and beta must be nonnegative");

  SweepResult result;
  for (int tau : grid) {
    DecoderConfig cfg = base;
    cfg.tau_max = tau;
    Decoder decoder(model, lexicon_senses(lex), cfg);

    std::size_t humor_events = 0;
    std::size_t steps = 0;
    std::size_t latency_sum = 0;
    for (const auto& text : texts) {
      DecoderState state;
      for (const SymbolId& symbol : text) {
        for (const Event& event : decoder.step(state, symbol)) {
          if (std::holds_alternative<HumorEvent>(event)) ++humor_events;
        }
        ++steps;
        latency_sum += static_cast<std::size_t>(state.front_a - state.commit_c);
      }
      for (const Event& event : decoder.finish(state)) {
        if (std::holds_alternative<HumorEvent>(event)) ++humor_events;
      }
    }

    SweepRow row;
    row.tau = tau;
    row.retraction_rate =
        rounded(static_cast<double>(humor_events) / static_cast<double>(steps));
    row.mean_latency =
        rounded(static_cast<double>(latency_sum) / static_cast<double>(steps));
    row.loss = rounded(alpha * row.retraction_rate + beta * row.mean_latency);
    result.rows.push_back(row);
  }

  result.tau_star = result.rows.front().tau;
  double best = result.rows.front().loss;
  for (const SweepRow& row : result.rows) {
    if (row.loss < best) {
      best = row.loss;
      result.tau_star = row.tau;
    }
  }
  return result;
}

std::string format_sweep_table(const SweepResult& result) {
  std::ostringstream out;
  out << "tau\tretraction_rate\tmean_latency\tloss\n";
  for (const SweepRow& row : result.rows) {
    out << row.tau << '\t' << format_probability(row.retraction_rate) << '\t'
        << format_probability(row.mean_latency) << '\t'
        << format_probability(row.loss) << '\n';
  }
  out << "tau_star\t" << result.tau_star << '\n';
  return out.str();
}

}  // namespace humor
