#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "humor/events.hpp"
#include "humor/laughter.hpp"

namespace humor {

// One line-delimited JSON record per event: {"t": step, "type": ...}.
std::string event_to_json_line(const Event& event, int t_offset = 0,
                               std::optional<std::string_view> channel = {});

// Streams events as JSON lines, inserting one laughter record directly after
// every humor record at the same step; laughter seeds derive from the base
// seed and the running humor count.
class TraceWriter {
 public:
  TraceWriter(std::ostream& out, LaughterParams params, std::uint64_t seed)
      : out_(&out), params_(params), seed_(seed) {}

  void write(const Event& event, int t_offset = 0,
             std::optional<std::string_view> channel = {});

  int humor_count() const { return humor_count_; }

 private:
  std::ostream* out_;
  LaughterParams params_;
  std::uint64_t seed_;
  int humor_count_ = 0;
};

}  // namespace humor
