#pragma once

#include <string>
#include <vector>

#include "humor/decoder.hpp"
#include "humor/lexicon.hpp"
#include "humor/ngram.hpp"

namespace humor {

struct SweepRow {
  int tau = 0;
  double retraction_rate = 0.0;  // humor events per symbol
  double mean_latency = 0.0;     // average front_A - commit_C, sampled each step
  double loss = 0.0;             // alpha * rate + beta * latency
};

struct SweepResult {
  std::vector<SweepRow> rows;
  int tau_star = 0;  // argmin of loss, lowest tau on ties
};

// Runs every text at every grid value of tau_max. Rates and latencies are
// rounded to the printed 12-decimal precision before the loss is computed, so
// the table recomputes exactly from its own columns.
SweepResult sweep_tau(const std::vector<std::vector<SymbolId>>& texts,
                      const Lexicon& lex, const BigramModel& model,
                      const std::vector<int>& grid, double alpha, double beta,
                      const DecoderConfig& base);

std::string format_sweep_table(const SweepResult& result);

}  // namespace humor
