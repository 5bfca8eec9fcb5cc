#include "humor/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>

namespace humor {
namespace {

[[noreturn]] void fail(const char* what, std::size_t line, const std::string& message) {
  throw ParseError(std::string(what) + " line " + std::to_string(line) + ": " + message);
}

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw ParseError(std::string("cannot open ") + what + " file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

AssociationMap AssociationMap::from_text(std::string_view text) {
  AssociationMap map;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) fail("association map", line_no, "missing tab");
    std::string image = line.substr(0, tab);
    std::string rest = line.substr(tab + 1);
    if (image.empty() || rest.empty()) fail("association map", line_no, "empty field");

    Parents parents;
    std::istringstream items(rest);
    std::string item;
    while (std::getline(items, item, ',')) {
      std::size_t colon = item.rfind(':');
      if (colon == std::string::npos || colon == 0)
        fail("association map", line_no, "expected parent:rank");
      int rank = 0;
      try {
        rank = std::stoi(item.substr(colon + 1));
      } catch (const std::exception&) {
        fail("association map", line_no, "bad rank");
      }
      parents.emplace_back(item.substr(0, colon), rank);
    }
    if (parents.empty()) fail("association map", line_no, "empty parent list");
    if (map.index_.count(image)) fail("association map", line_no, "duplicate image");
    map.add(image, std::move(parents));
  }
  return map;
}

AssociationMap AssociationMap::from_file(const std::string& path) {
  return from_text(read_file(path, "association map"));
}

void AssociationMap::add(const ImageId& image, Parents parents) {
  if (index_.count(image))
    throw std::invalid_argument("duplicate association entry: " + image);
  index_[image] = entries_.size();
  entries_.emplace_back(image, std::move(parents));
}

const AssociationMap::Parents* AssociationMap::find(const ImageId& image) const {
  auto it = index_.find(image);
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

std::string AssociationMap::to_text() const {
  std::ostringstream out;
  for (const auto& [image, parents] : entries_) {
    out << image << '\t';
    for (std::size_t i = 0; i < parents.size(); ++i) {
      if (i) out << ',';
      out << parents[i].first << ':' << parents[i].second;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

SenseSet enlarged_senses(const ImageId& image, const AssociationMap& map,
                         double log_lambda) {
  SenseSet senses;
  senses.images.push_back(image);
  senses.bias.push_back(0.0);
  if (const AssociationMap::Parents* parents = map.find(image)) {
    for (const auto& [parent, rank] : *parents) {
      if (parent == image) continue;
      senses.images.push_back(parent);
      senses.bias.push_back(rank * log_lambda);
    }
  }
  return senses;
}

}  // namespace

ScoredLattice enlarge(std::span<const ImageId> primary, const AssociationMap& map,
                      double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  const double log_lambda = std::log(lambda);
  ScoredLattice lattice;
  for (const ImageId& image : primary) {
    SenseSet senses = enlarged_senses(image, map, log_lambda);
    lattice.window.columns.push_back(std::move(senses.images));
    lattice.bias.push_back(std::move(senses.bias));
  }
  return lattice;
}

SenseSource association_senses(const AssociationMap& map, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  const double log_lambda = std::log(lambda);
  return [&map, log_lambda](const SymbolId& symbol) -> std::optional<SenseSet> {
    return enlarged_senses(symbol, map, log_lambda);
  };
}

std::vector<ImageId> merge_repetitions(std::span<const ImageId> trajectory) {
  std::vector<ImageId> merged;
  for (const ImageId& image : trajectory) {
    if (merged.empty() || merged.back() != image) merged.push_back(image);
  }
  return merged;
}

ExclusionList ExclusionList::from_text(std::string_view text) {
  ExclusionList list;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) fail("exclusion list", line_no, "missing tab");
    std::string a = line.substr(0, tab);
    std::string b = line.substr(tab + 1);
    if (a.empty() || b.empty()) fail("exclusion list", line_no, "empty image");
    list.add(a, b);
  }
  return list;
}

ExclusionList ExclusionList::from_file(const std::string& path) {
  return from_text(read_file(path, "exclusion list"));
}

void ExclusionList::add(const ImageId& a, const ImageId& b) {
  pairs_.insert({std::min(a, b), std::max(a, b)});
}

bool ExclusionList::excluded(const ImageId& a, const ImageId& b) const {
  return pairs_.count({std::min(a, b), std::max(a, b)}) > 0;
}

namespace {

struct Channel {
  explicit Channel(Decoder decoder) : dec(std::move(decoder)) {}
  Decoder dec;
  DecoderState state;
  std::mt19937_64 jitter_rng;
  int jitter_amplitude = 0;
  int rate = 1;
  bool finished = false;
  std::set<ImageId> committed_set;
};

int draw_budget(Channel& ch) {
  if (ch.jitter_amplitude <= 0) return ch.rate;
  std::uniform_int_distribution<int> jitter(-ch.jitter_amplitude, ch.jitter_amplitude);
  return std::max(0, ch.rate + jitter(ch.jitter_rng));
}

}  // namespace

RaceTrace run_two_channels(std::span<const SymbolId> text, const Lexicon& lex,
                           const BigramModel& model, const AssociationMap& map,
                           const ExclusionList& exclusions, ChannelConfig cfg1,
                           ChannelConfig cfg2, const DecoderConfig& base,
                           double lambda, std::uint64_t seed) {
  DecoderConfig primary_cfg = base;
  primary_cfg.tau_max = cfg1.tau_max;
  DecoderConfig secondary_cfg = base;
  secondary_cfg.tau_max = cfg2.tau_max;

  Channel primary{Decoder(model, lexicon_senses(lex), primary_cfg)};
  Channel secondary{Decoder(model, association_senses(map, lambda), secondary_cfg)};
  primary.rate = cfg1.rate;
  primary.jitter_amplitude = cfg1.jitter_amplitude;
  primary.jitter_rng.seed(mix_seed(seed ^ cfg1.jitter_seed, kPrimaryChannel));
  secondary.rate = cfg2.rate;
  secondary.jitter_amplitude = cfg2.jitter_amplitude;
  secondary.jitter_rng.seed(mix_seed(seed ^ cfg2.jitter_seed, kSecondaryChannel));

  RaceTrace trace;
  std::deque<ImageId> pending;  // channel 1 commits awaiting enlargement
  std::size_t consumed = 0;
  int tick = 0;

  auto absorb = [&](Channel& self, Channel& other, int channel_id,
                    std::vector<Event> events) {
    for (Event& event : events) {
      std::visit([&](auto& ev) { ev.t = tick; }, event);
      const CommitEvent* commit = std::get_if<CommitEvent>(&event);
      std::vector<ImageId> committed_now;
      int committed_base = 0;
      if (commit) {
        committed_now = commit->images;
        committed_base = commit->from;
      }
      trace.records.push_back(RaceRecord{channel_id, std::move(event)});

      for (std::size_t i = 0; i < committed_now.size(); ++i) {
        const ImageId& image = committed_now[i];
        self.committed_set.insert(image);
        if (channel_id == kPrimaryChannel) pending.push_back(image);
        if (trace.first_channel) continue;
        for (const ImageId& prior : other.committed_set) {
          if (!exclusions.excluded(image, prior)) continue;
          // The other channel's version arrived first; this channel lags and
          // carries the retraction.
          trace.first_channel =
              channel_id == kPrimaryChannel ? kSecondaryChannel : kPrimaryChannel;
          HumorEvent humor;
          humor.t = tick;
          humor.from = committed_base + static_cast<int>(i);
          humor.to = humor.from + 1;
          humor.old_images = {prior};
          humor.new_images = {image};
          humor.p_old = other.state.beam.empty() ? 0.0 : other.state.beam.front().score;
          humor.p_new = self.state.beam.empty() ? 0.0 : self.state.beam.front().score;
          trace.records.push_back(RaceRecord{channel_id, Event(humor)});
          trace.records.push_back(
              RaceRecord{0, Event(VerdictEvent{tick, *trace.first_channel == kPrimaryChannel
                                                         ? "primary"
                                                         : "secondary"})});
          break;
        }
      }
    }
  };

  const int guard = static_cast<int>(text.size()) * 64 + 1024;
  while (!(primary.finished && secondary.finished && pending.empty())) {
    ++tick;
    if (tick > guard) throw std::runtime_error("two-channel run did not terminate");

    int budget = draw_budget(primary);
    while (budget-- > 0 && consumed < text.size()) {
      absorb(primary, secondary, kPrimaryChannel,
             primary.dec.step(primary.state, text[consumed++]));
    }
    if (consumed == text.size() && !primary.finished) {
      absorb(primary, secondary, kPrimaryChannel, primary.dec.finish(primary.state));
      primary.finished = true;
    }

    budget = draw_budget(secondary);
    while (budget-- > 0 && !pending.empty()) {
      SymbolId symbol = pending.front();
      pending.pop_front();
      absorb(secondary, primary, kSecondaryChannel,
             secondary.dec.step(secondary.state, symbol));
    }
    if (primary.finished && pending.empty() && !secondary.finished) {
      absorb(secondary, primary, kSecondaryChannel, secondary.dec.finish(secondary.state));
      secondary.finished = true;
    }
  }
  return trace;
}

}  // namespace humor
