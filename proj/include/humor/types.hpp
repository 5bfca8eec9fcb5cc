#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace humor {

using SymbolId = std::string;
using ImageId = std::string;

// Reserved identifiers shared across all file formats.
inline constexpr const char* kGapSymbol = "__GAP__";
inline constexpr const char* kGapImage = "__GAP__";
inline constexpr const char* kBosImage = "__BOS__";

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown symbol lookup; the decoder turns this into an Incomprehension event.
struct OovError : std::runtime_error {
  explicit OovError(const SymbolId& s)
      : std::runtime_error("unknown symbol: " + s), symbol(s) {}
  SymbolId symbol;
};

// splitmix64 mixing, used to derive independent seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace humor
