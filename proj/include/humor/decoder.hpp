#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "humor/emotions.hpp"
#include "humor/events.hpp"
#include "humor/lexicon.hpp"
#include "humor/ngram.hpp"
#include "humor/types.hpp"

namespace humor {

struct Trajectory {
  std::vector<ImageId> images;
  std::vector<int> senses;  // per-column sense index, drives all tie-breaking
  double score = 0.0;
};

struct DecoderConfig {
  // Commit delay bound in symbol steps; nullopt means unbounded (commit only
  // at the branch point).
  std::optional<int> tau_max = 2;
  // Operative memory in trajectory-symbols; beam capacity per step is
  // max(1, memory_budget / trajectory length).
  int memory_budget = 64;
  // Per-symbol log-probability threshold below which a step is incomprehensible.
  double p_low = -6.0;
  bool suppression_enabled = false;
  int context_window = 2;
  EmotionConfig emotions;
};

struct DecoderState {
  std::vector<Trajectory> beam;  // descending score, ties by sense indices
  int front_a = 0;               // symbols consumed so far
  int commit_c = 0;              // length of the committed prefix
  std::vector<ImageId> committed;
  std::set<std::pair<std::string, ImageId>> suppression_store;
  double prev_best_score = 0.0;

  // Clears everything except the suppression store, which persists for the
  // lifetime of the state (hackneyed-joke memory).
  void reset_keep_suppression();
};

// Largest k such that all beam trajectories agree on images[0..k).
std::size_t branch_point(const std::vector<Trajectory>& beam);

// Unbounded tau commits at the branch point; otherwise C may outrun B by the
// tau_max rule: C = max(B, A - tau_max).
int commit_index(int front_a, int branch_b, std::optional<int> tau_max);

// Deterministic signature of the last `window` images preceding a position.
std::string context_signature(std::span<const ImageId> tail, int window);

// Candidate images for one symbol plus an additive per-sense score term
// (zero at the primary level; the hierarchy level biases larger images).
struct SenseSet {
  std::vector<ImageId> images;
  std::vector<double> bias;
};

// Returns nullopt for out-of-vocabulary symbols.
using SenseSource = std::function<std::optional<SenseSet>(const SymbolId&)>;

SenseSource lexicon_senses(const Lexicon& lex);

struct Trace {
  std::vector<Event> events;
  DecoderState final_state;
};

// Incremental processor: maintains the beam, advances front A, computes
// branch point B and commit point C under tau_max, and emits Commit,
// HumorousEffect and Incomprehension events. States are single-owner; the
// model and sense source are shared immutable.
class Decoder {
 public:
  Decoder(const BigramModel& model, SenseSource senses, DecoderConfig cfg);

  std::vector<Event> step(DecoderState& state, const SymbolId& symbol) const;

  // Commits the remainder of the best trajectory, repairing any contradiction
  // with already-committed content first.
  std::vector<Event> finish(DecoderState& state) const;

  Trace run(std::span<const SymbolId> text) const;
  // Reuses `state`, resetting everything except the suppression store.
  std::vector<Event> run(std::span<const SymbolId> text, DecoderState& state) const;

  const DecoderConfig& config() const { return cfg_; }

 private:
  std::vector<Event> repair_retraction(DecoderState& state, int t) const;

  const BigramModel* model_;
  SenseSource senses_;
  DecoderConfig cfg_;
};

}  // namespace humor
