#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "humor/decoder.hpp"
#include "humor/events.hpp"
#include "humor/lexicon.hpp"
#include "humor/ngram.hpp"
#include "humor/types.hpp"

namespace humor {

// Associative links from an image to larger/more-abstract images, with an
// integer size rank ordering smaller -> larger.
class AssociationMap {
 public:
  using Parents = std::vector<std::pair<ImageId, int>>;

  // Format: lines `image<TAB>parent:rank,parent:rank,...`.
  static AssociationMap from_text(std::string_view text);
  static AssociationMap from_file(const std::string& path);

  void add(const ImageId& image, Parents parents);
  const Parents* find(const ImageId& image) const;
  std::string to_text() const;

 private:
  std::vector<std::pair<ImageId, Parents>> entries_;
  std::map<ImageId, std::size_t> index_;
};

struct ScoredLattice {
  LatticeWindow window;
  std::vector<std::vector<double>> bias;
};

// Builds the secondary lattice: column n holds primary image n itself (rank 0)
// plus its associated images; each candidate carries a size_rank * log(lambda)
// score bonus, weighting versions with larger images up.
ScoredLattice enlarge(std::span<const ImageId> primary, const AssociationMap& map,
                      double lambda);

// Sense source for an incremental secondary-level decoder fed with the
// primary level's committed images.
SenseSource association_senses(const AssociationMap& map, double lambda);

// Collapses maximal runs of consecutive equal images into one occurrence.
std::vector<ImageId> merge_repetitions(std::span<const ImageId> trajectory);

// Pairs of images that cannot co-hold across channels.
class ExclusionList {
 public:
  // Format: lines `imageA<TAB>imageB`.
  static ExclusionList from_text(std::string_view text);
  static ExclusionList from_file(const std::string& path);

  void add(const ImageId& a, const ImageId& b);
  bool excluded(const ImageId& a, const ImageId& b) const;
  const std::set<std::pair<ImageId, ImageId>>& pairs() const { return pairs_; }

 private:
  std::set<std::pair<ImageId, ImageId>> pairs_;  // normalized (min, max)
};

struct ChannelConfig {
  int rate = 1;              // symbols consumed per tick
  int jitter_amplitude = 0;  // per-tick consumption jitter, 0 or 1
  std::uint64_t jitter_seed = 0;
  std::optional<int> tau_max = 2;
};

inline constexpr int kPrimaryChannel = 1;
inline constexpr int kSecondaryChannel = 2;

struct RaceRecord {
  int channel = 0;  // 0 marks race-level records (the verdict)
  Event event;
};

struct RaceTrace {
  std::vector<RaceRecord> records;
  // Which channel's version reached consciousness first; set when the two
  // channels committed mutually exclusive images.
  std::optional<int> first_channel;
};

// Advances a primary-level decoder (channel 1) and a secondary-level decoder
// over its enlarged committed stream (channel 2) in a deterministic tick
// loop. When one channel commits an image incompatible with content the other
// channel already transmitted, a HumorousEffect fires in the lagging channel
// and the verdict records which version arrived first.
RaceTrace run_two_channels(std::span<const SymbolId> text, const Lexicon& lex,
                           const BigramModel& model, const AssociationMap& map,
                           const ExclusionList& exclusions, ChannelConfig cfg1,
                           ChannelConfig cfg2, const DecoderConfig& base,
                           double lambda, std::uint64_t seed);

}  // namespace humor
