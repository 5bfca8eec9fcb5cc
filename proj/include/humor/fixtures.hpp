#pragma once

#include <string_view>
#include <vector>

#include "humor/types.hpp"

namespace humor::fixtures {

// Bundled demo inputs; lexicons, models and association maps are stored in
// their on-disk file formats.
struct Fixture {
  std::string_view id;
  std::string_view title;
  std::string_view lexicon;
  std::string_view model;
  std::string_view text;        // one text per line
  std::string_view assoc;       // empty when unused
  std::string_view exclusions;  // empty when unused
};

const std::vector<Fixture>& all();
const Fixture* find(std::string_view id);

// Text format helpers: whitespace-separated SymbolIds, `_` denotes GAP,
// one text per line.
std::vector<SymbolId> parse_symbols(std::string_view line);
std::vector<std::vector<SymbolId>> parse_texts(std::string_view document);

}  // namespace humor::fixtures
