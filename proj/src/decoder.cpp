#include "humor/decoder.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace humor {

void DecoderState::reset_keep_suppression() {
  beam.clear();
  front_a = 0;
  commit_c = 0;
  committed.clear();
  prev_best_score = 0.0;
}

std::size_t branch_point(const std::vector<Trajectory>& beam) {
  assert(!beam.empty());
  const std::vector<ImageId>& head = beam.front().images;
  std::size_t agreed = head.size();
  for (std::size_t i = 1; i < beam.size(); ++i) {
    const std::vector<ImageId>& other = beam[i].images;
    std::size_t k = 0;
    while (k < agreed && head[k] == other[k]) ++k;
    agreed = k;
    if (agreed == 0) break;
  }
  return agreed;
}

int commit_index(int front_a, int branch_b, std::optional<int> tau_max) {
  assert(branch_b <= front_a);
  if (!tau_max) return branch_b;
  return std::max(branch_b, front_a - *tau_max);
}

std::string context_signature(std::span<const ImageId> tail, int window) {
  const std::size_t take =
      std::min(tail.size(), static_cast<std::size_t>(std::max(window, 0)));
  std::string sig;
  for (std::size_t i = tail.size() - take; i < tail.size(); ++i) {
    if (!sig.empty()) sig.push_back(' ');
    sig += tail[i];
  }
  return sig;
}

SenseSource lexicon_senses(const Lexicon& lex) {
  return [&lex](const SymbolId& symbol) -> std::optional<SenseSet> {
    const std::vector<ImageId>* images = lex.find(symbol);
    if (!images) return std::nullopt;
    return SenseSet{*images, std::vector<double>(images->size(), 0.0)};
  };
}

Decoder::Decoder(const BigramModel& model, SenseSource senses, DecoderConfig cfg)
    : model_(&model), senses_(std::move(senses)), cfg_(cfg) {
  if (cfg_.memory_budget < 1)
    throw std::invalid_argument("memory budget must be positive");
  if (cfg_.tau_max && *cfg_.tau_max < 0)
    throw std::invalid_argument("tau_max must be nonnegative");
}

std::vector<Event> Decoder::repair_retraction(DecoderState& state, int t) const {
  std::vector<Event> events;
  if (state.commit_c == 0 || state.beam.empty()) return events;
  const Trajectory& best = state.beam.front();
  const std::size_t limit =
      std::min<std::size_t>(state.commit_c, best.images.size());

  // One event per maximal contiguous run of differing positions.
  std::size_t pos = 0;
  bool changed = false;
  while (pos < limit) {
    if (state.committed[pos] == best.images[pos]) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < limit && state.committed[end] != best.images[end]) ++end;
    HumorEvent ev;
    ev.t = t;
    ev.from = static_cast<int>(pos);
    ev.to = static_cast<int>(end);
    ev.old_images.assign(state.committed.begin() + pos, state.committed.begin() + end);
    ev.new_images.assign(best.images.begin() + pos, best.images.begin() + end);
    ev.p_old = state.prev_best_score;
    ev.p_new = best.score;
    if (cfg_.suppression_enabled) {
      // Key the retracted images by the context they were read in, taken from
      // the pre-retraction committed content.
      for (std::size_t i = pos; i < end; ++i) {
        std::string sig = context_signature(
            std::span<const ImageId>(state.committed.data(), i), cfg_.context_window);
        state.suppression_store.emplace(std::move(sig), state.committed[i]);
      }
    }
    events.push_back(std::move(ev));
    changed = true;
    pos = end;
  }
  if (changed) {
    std::copy(best.images.begin(), best.images.begin() + limit,
              state.committed.begin());
  }
  return events;
}

std::vector<Event> Decoder::step(DecoderState& state, const SymbolId& symbol) const {
  std::vector<Event> events;
  const std::optional<SenseSet> senses = senses_(symbol);

  if (!senses) {
    // Out of vocabulary: complete incomprehension, the beam is untouched.
    state.front_a += 1;
    const int t = state.front_a - 1;
    events.push_back(IncomprehensionEvent{t, t});
    if (!state.beam.empty() && std::isfinite(state.beam.front().score)) {
      const Trajectory& best = state.beam.front();
      const double len = static_cast<double>(best.images.size());
      std::optional<double> runner;
      if (state.beam.size() > 1) runner = state.beam[1].score / len;
      events.push_back(
          EmotionEvent{t, sample_emotions(best.score / len, runner, cfg_.emotions)});
    }
    return events;
  }
  assert(!senses->images.empty());

  // Extend every beam trajectory by every sense, rescoring in log domain.
  const std::vector<Trajectory> seed{Trajectory{}};
  const std::vector<Trajectory>& sources = state.beam.empty() ? seed : state.beam;
  std::vector<Trajectory> candidates;
  candidates.reserve(sources.size() * senses->images.size());
  for (bool apply_suppression : {true, false}) {
    for (const Trajectory& base : sources) {
      const ImageId& prev = base.images.empty() ? ImageId(kBosImage) : base.images.back();
      for (std::size_t s = 0; s < senses->images.size(); ++s) {
        const ImageId& img = senses->images[s];
        if (apply_suppression && cfg_.suppression_enabled) {
          std::string sig = context_signature(
              std::span<const ImageId>(base.images), cfg_.context_window);
          if (state.suppression_store.count({sig, img})) continue;
        }
        Trajectory next = base;
        next.images.push_back(img);
        next.senses.push_back(static_cast<int>(s));
        next.score += model_->log_transition(prev, img) + senses->bias[s];
        candidates.push_back(std::move(next));
      }
    }
    if (!candidates.empty()) break;  // suppression must not empty the beam
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Trajectory& a, const Trajectory& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.senses < b.senses;
            });
  const std::size_t length = candidates.front().images.size();
  const std::size_t capacity = std::max<std::size_t>(
      1, static_cast<std::size_t>(cfg_.memory_budget) / length);
  if (candidates.size() > capacity) candidates.resize(capacity);
  state.beam = std::move(candidates);
  state.front_a += 1;
  const int t = state.front_a - 1;

  const Trajectory& best = state.beam.front();
  const double per_symbol =
      best.score / static_cast<double>(best.images.size());
  const bool incomprehensible = per_symbol < cfg_.p_low;
  if (incomprehensible) events.push_back(IncomprehensionEvent{t, t});

  int target = commit_index(state.front_a,
                            static_cast<int>(branch_point(state.beam)), cfg_.tau_max);
  target = std::min(target, static_cast<int>(best.images.size()));
  const int new_commit =
      incomprehensible ? state.commit_c : std::max(state.commit_c, target);

  auto retractions = repair_retraction(state, t);
  std::move(retractions.begin(), retractions.end(), std::back_inserter(events));

  if (new_commit > state.commit_c) {
    CommitEvent ev;
    ev.t = t;
    ev.from = state.commit_c;
    ev.to = new_commit;
    ev.images.assign(best.images.begin() + state.commit_c,
                     best.images.begin() + new_commit);
    events.push_back(std::move(ev));
    state.committed.insert(state.committed.end(),
                           best.images.begin() + state.commit_c,
                           best.images.begin() + new_commit);
    state.commit_c = new_commit;
  }

  if (std::isfinite(per_symbol)) {
    std::optional<double> runner;
    if (state.beam.size() > 1)
      runner = state.beam[1].score / static_cast<double>(best.images.size());
    events.push_back(
        EmotionEvent{t, sample_emotions(per_symbol, runner, cfg_.emotions)});
  }
  state.prev_best_score = best.score;
  return events;
}

std::vector<Event> Decoder::finish(DecoderState& state) const {
  std::vector<Event> events;
  if (state.beam.empty()) return events;
  const int t = state.front_a;

  auto retractions = repair_retraction(state, t);
  std::move(retractions.begin(), retractions.end(), std::back_inserter(events));

  const Trajectory& best = state.beam.front();
  const int length = static_cast<int>(best.images.size());
  if (length > state.commit_c) {
    CommitEvent ev;
    ev.t = t;
    ev.from = state.commit_c;
    ev.to = length;
    ev.images.assign(best.images.begin() + state.commit_c, best.images.end());
    events.push_back(std::move(ev));
    state.committed.insert(state.committed.end(),
                           best.images.begin() + state.commit_c, best.images.end());
    state.commit_c = length;
  }
  return events;
}

Trace Decoder::run(std::span<const SymbolId> text) const {
  Trace trace;
  trace.events = run(text, trace.final_state);
  return trace;
}

std::vector<Event> Decoder::run(std::span<const SymbolId> text,
                                DecoderState& state) const {
  state.reset_keep_suppression();
  std::vector<Event> events;
  for (const SymbolId& symbol : text) {
    auto step_events = step(state, symbol);
    std::move(step_events.begin(), step_events.end(), std::back_inserter(events));
  }
  auto tail = finish(state);
  std::move(tail.begin(), tail.end(), std::back_inserter(events));
  return events;
}

}  // namespace humor
