#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "humor/types.hpp"

namespace humor {

// Symbol -> ordered image set mapping of the primary processing level.
// Entries keep file order so downstream tie-breaking stays deterministic.
class Lexicon {
 public:
  using Entry = std::pair<SymbolId, std::vector<ImageId>>;

  // Format: one entry per line, `symbol<TAB>image1,image2,...`.
  // '#'-prefixed lines are comments; `__GAP__` may not be used as a key.
  static Lexicon from_text(std::string_view text);
  static Lexicon from_file(const std::string& path);

  void add(const SymbolId& symbol, std::vector<ImageId> images);

  // Returns nullptr for out-of-vocabulary symbols. GAP always resolves to
  // the reserved gap image, which occupies a trajectory position like any
  // other image.
  const std::vector<ImageId>* find(const SymbolId& symbol) const;

  // Like find(), but throws OovError for unknown symbols.
  const std::vector<ImageId>& senses(const SymbolId& symbol) const;

  const std::vector<Entry>& entries() const { return entries_; }
  const std::set<ImageId>& image_inventory() const { return inventory_; }

  std::string to_text() const;
  void save(const std::string& path) const;

  bool operator==(const Lexicon& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<Entry> entries_;
  std::map<SymbolId, std::size_t> index_;
  std::set<ImageId> inventory_;
};

}  // namespace humor
