#include "humor/lexicon.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace humor {
namespace {

const std::vector<ImageId> kGapSenses{kGapImage};

bool valid_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ParseError("lexicon line " + std::to_string(line) + ": " + message);
}

}  // namespace

Lexicon Lexicon::from_text(std::string_view text) {
  Lexicon lex;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) fail(line_no, "missing tab separator");
    std::string_view symbol = line.substr(0, tab);
    std::string_view rest = line.substr(tab + 1);
    if (!valid_token(symbol)) fail(line_no, "bad symbol token");
    if (symbol == kGapSymbol) fail(line_no, "__GAP__ is reserved");
    if (lex.index_.count(std::string(symbol)))
      fail(line_no, "duplicate symbol '" + std::string(symbol) + "'");
    if (rest.empty()) fail(line_no, "empty sense list");

    std::vector<ImageId> images;
    std::set<std::string_view> seen;
    for (std::string_view item : split(rest, ',')) {
      if (!valid_token(item)) fail(line_no, "bad image token");
      if (!seen.insert(item).second)
        fail(line_no, "duplicate image '" + std::string(item) + "'");
      images.emplace_back(item);
    }
    lex.add(std::string(symbol), std::move(images));
  }
  return lex;
}

Lexicon Lexicon::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

void Lexicon::add(const SymbolId& symbol, std::vector<ImageId> images) {
  if (symbol == kGapSymbol)
    throw std::invalid_argument("__GAP__ is reserved");
  if (images.empty())
    throw std::invalid_argument("empty sense list for '" + symbol + "'");
  if (index_.count(symbol))
    throw std::invalid_argument("duplicate symbol '" + symbol + "'");
  index_[symbol] = entries_.size();
  for (const ImageId& img : images) inventory_.insert(img);
  entries_.emplace_back(symbol, std::move(images));
}

const std::vector<ImageId>* Lexicon::find(const SymbolId& symbol) const {
  if (symbol == kGapSymbol) return &kGapSenses;
  auto it = index_.find(symbol);
  if (it == index_.end()) return nullptr;
  return &entries_[it->second].second;
}

const std::vector<ImageId>& Lexicon::senses(const SymbolId& symbol) const {
  const std::vector<ImageId>* found = find(symbol);
  if (!found) throw OovError(symbol);
  return *found;
}

std::string Lexicon::to_text() const {
  std::ostringstream out;
  for (const Entry& entry : entries_) {
    out << entry.first << '\t';
    for (std::size_t i = 0; i < entry.second.size(); ++i) {
      if (i) out << ',';
      out << entry.second[i];
    }
    out << '\n';
  }
  return out.str();
}

void Lexicon::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write lexicon file: " + path);
  out << to_text();
}

}  // namespace humor
