#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "humor/types.hpp"

namespace humor {

struct Smoothing {
  enum class Kind { kMle, kAddOne };
  Kind kind = Kind::kMle;
  double alpha = 0.0;

  static Smoothing mle() { return {Kind::kMle, 0.0}; }
  static Smoothing add_one(double alpha = 1.0);
};

// Image-transition probabilities p_ij with an explicit begin-of-sequence
// image, so the first column needs no separate prior. Immutable after
// construction; safe to share across threads.
class BigramModel {
 public:
  using Row = std::map<ImageId, double>;
  using Rows = std::map<ImageId, Row>;

  // Counts bigrams over the corpus, each sequence implicitly prefixed by BOS.
  // AddOne(alpha) distributes mass over the full vocabulary excluding BOS.
  static BigramModel train(const std::vector<std::vector<ImageId>>& corpus,
                           Smoothing smoothing);
  static BigramModel from_rows(Rows rows, Smoothing smoothing = Smoothing::mle());

  // Format: header `bigram v1 smoothing=<mle|addone:ALPHA>`, then sorted rows
  // `i<TAB>j<TAB>probability` with 12 decimal digits.
  static BigramModel from_text(std::string_view text);
  static BigramModel from_file(const std::string& path);
  std::string to_text() const;
  void save(const std::string& path) const;

  double transition_prob(const ImageId& from, const ImageId& to) const;
  double log_transition(const ImageId& from, const ImageId& to) const;

  // log p(BOS -> t0) + sum log p(t_k -> t_{k+1}); empty trajectory scores 0,
  // any zero factor yields -inf.
  double score_trajectory(std::span<const ImageId> trajectory) const;

  const std::set<ImageId>& vocab() const { return vocab_; }
  const Rows& rows() const { return rows_; }
  const Smoothing& smoothing() const { return smoothing_; }

 private:
  Rows rows_;
  std::set<ImageId> vocab_;
  Smoothing smoothing_;
};

// One ordered image set per symbol position.
struct LatticeWindow {
  std::vector<std::vector<ImageId>> columns;
  std::size_t size() const { return columns.size(); }
};

struct ViterbiResult {
  std::vector<ImageId> images;
  std::vector<int> senses;
  double score = 0.0;
};

// Exhaustive search over all lattice trajectories ("all possible trajectories
// are constructed"); score ties resolve to the lowest column indices, earliest
// column first. `bias` optionally adds a per-candidate term to each step's
// score (used by the hierarchy level's size weighting). Throws when the
// trajectory count exceeds `enumeration_cap`.
ViterbiResult exact_viterbi(const BigramModel& model, const LatticeWindow& window,
                            const std::vector<std::vector<double>>* bias = nullptr,
                            std::size_t enumeration_cap = 1000000);

// Fixed 12-decimal formatting used by the model file and sweep table.
std::string format_probability(double p);

}  // namespace humor
