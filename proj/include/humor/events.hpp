#pragma once

#include <string>
#include <variant>
#include <vector>

#include "humor/emotions.hpp"
#include "humor/types.hpp"

namespace humor {

// Events carry a step index `t`; position ranges refer to trajectory
// positions (half-open [from, to)).

struct CommitEvent {
  int t = 0;
  int from = 0;
  int to = 0;
  std::vector<ImageId> images;
};

// A retraction: committed content contradicted by a later-winning trajectory
// and replaced in place. Old and new fragments span exactly the differing
// positions.
struct HumorEvent {
  int t = 0;
  int from = 0;
  int to = 0;
  std::vector<ImageId> old_images;
  std::vector<ImageId> new_images;
  double p_old = 0.0;
  double p_new = 0.0;
};

struct IncomprehensionEvent {
  int t = 0;
  int position = 0;
};

struct EmotionEvent {
  int t = 0;
  EmotionSample sample;
};

struct LaughterEvent {
  int t = 0;
  double amplitude = 0.0;  // motor share of the released energy
  double limbic = 0.0;
  int sweeps = 0;
  bool nervous = false;
};

struct VerdictEvent {
  int t = 0;
  std::string first;  // which channel's version reached consciousness first
};

using Event = std::variant<CommitEvent, HumorEvent, IncomprehensionEvent,
                           EmotionEvent, LaughterEvent, VerdictEvent>;

inline int event_time(const Event& e) {
  return std::visit([](const auto& ev) { return ev.t; }, e);
}

}  // namespace humor
