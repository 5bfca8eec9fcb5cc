#include "humor/trace.hpp"

#include <cmath>

#include "json.hpp"

namespace humor {
namespace {

using nlohmann::json;

json number_or_null(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

json to_json(const Event& event) {
  json j;
  std::visit(
      [&j](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        j["t"] = ev.t;
        if constexpr (std::is_same_v<T, CommitEvent>) {
          j["type"] = "commit";
          j["from"] = ev.from;
          j["to"] = ev.to;
          j["images"] = ev.images;
        } else if constexpr (std::is_same_v<T, HumorEvent>) {
          j["type"] = "humor";
          j["from"] = ev.from;
          j["to"] = ev.to;
          j["old"] = ev.old_images;
          j["new"] = ev.new_images;
          j["p_old"] = number_or_null(ev.p_old);
          j["p_new"] = number_or_null(ev.p_new);
        } else if constexpr (std::is_same_v<T, IncomprehensionEvent>) {
          j["type"] = "incomprehension";
          j["position"] = ev.position;
        } else if constexpr (std::is_same_v<T, EmotionEvent>) {
          j["type"] = "emotion";
          j["pleasure"] = number_or_null(ev.sample.pleasure);
          j["confidence"] = ev.sample.confidence
                                ? number_or_null(*ev.sample.confidence)
                                : json(nullptr);
          j["pmax"] = number_or_null(ev.sample.p_max);
          j["pcomp"] = ev.sample.p_comp ? number_or_null(*ev.sample.p_comp)
                                        : json(nullptr);
        } else if constexpr (std::is_same_v<T, LaughterEvent>) {
          j["type"] = "laughter";
          j["amplitude"] = ev.amplitude;
          j["limbic"] = ev.limbic;
          j["sweeps"] = ev.sweeps;
          j["nervous"] = ev.nervous;
        } else if constexpr (std::is_same_v<T, VerdictEvent>) {
          j["type"] = "verdict";
          j["first"] = ev.first;
        }
      },
      event);
  return j;
}

}  // namespace

std::string event_to_json_line(const Event& event, int t_offset,
                               std::optional<std::string_view> channel) {
  json j = to_json(event);
  j["t"] = j["t"].get<int>() + t_offset;
  if (channel) j["channel"] = *channel;
  return j.dump();
}

void TraceWriter::write(const Event& event, int t_offset,
                        std::optional<std::string_view> channel) {
  *out_ << event_to_json_line(event, t_offset, channel) << '\n';
  if (const HumorEvent* humor = std::get_if<HumorEvent>(&event)) {
    NullifyReport report = laughter_from_retraction(
        *humor, params_, mix_seed(seed_, static_cast<std::uint64_t>(humor_count_)));
    ++humor_count_;
    LaughterEvent laughter{humor->t, report.motor_share, report.limbic_share,
                           report.sweeps_used, false};
    *out_ << event_to_json_line(Event(laughter), t_offset, channel) << '\n';
  }
}

}  // namespace humor
