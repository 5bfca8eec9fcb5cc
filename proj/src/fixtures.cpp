#include "humor/fixtures.hpp"

#include <cctype>
#include <sstream>

namespace humor::fixtures {
namespace {

// The cedar chest. `chest` reads as a box in close context; the continuation
// columns stay ambiguous so the competing reading survives in the beam until
// `leg` flips the ranking.
const char kJokeLexicon[] =
    "my-uncle\tuncle\n"
    "has\thave\n"
    "cedar\tcedar\n"
    "chest\tbox,breast\n"
    "so-he-had\tfurniture,anatomy\n"
    "wooden\ttimber,prosthetic\n"
    "leg\tleg\n";

const char kJokeModel[] =
    "bigram v1 smoothing=mle\n"
    "__BOS__\tuncle\t1.0\n"
    "uncle\thave\t1.0\n"
    "have\tcedar\t1.0\n"
    "cedar\tbox\t0.6\n"
    "cedar\tbreast\t0.3\n"
    "cedar\t__GAP__\t0.1\n"
    "box\tfurniture\t0.7\n"
    "box\tanatomy\t0.05\n"
    "box\t__GAP__\t0.25\n"
    "breast\tfurniture\t0.05\n"
    "breast\tanatomy\t0.7\n"
    "breast\t__GAP__\t0.25\n"
    "furniture\ttimber\t0.7\n"
    "furniture\tprosthetic\t0.05\n"
    "furniture\t__GAP__\t0.25\n"
    "anatomy\ttimber\t0.05\n"
    "anatomy\tprosthetic\t0.7\n"
    "anatomy\t__GAP__\t0.25\n"
    "timber\tleg\t0.02\n"
    "timber\t__GAP__\t0.98\n"
    "prosthetic\tleg\t0.9\n"
    "prosthetic\t__GAP__\t0.1\n"
    "__GAP__\t__GAP__\t0.5\n"
    "__GAP__\tleg\t0.5\n";

const char kJokeText[] = "my-uncle has cedar chest so-he-had wooden leg\n";

// horns/hoofs/tail enlarge to the repeated larger image `cow`.
const char kCowLexicon[] =
    "horns\thorns\n"
    "hoofs\thoofs\n"
    "tail\ttail\n";

const char kCowModel[] =
    "bigram v1 smoothing=mle\n"
    "__BOS__\thorns\t0.25\n"
    "__BOS__\thoofs\t0.1\n"
    "__BOS__\ttail\t0.1\n"
    "__BOS__\tcow\t0.55\n"
    "horns\thoofs\t0.5\n"
    "horns\tcow\t0.5\n"
    "hoofs\ttail\t0.5\n"
    "hoofs\tcow\t0.5\n"
    "tail\tcow\t1.0\n"
    "cow\tcow\t0.7\n"
    "cow\thorns\t0.1\n"
    "cow\thoofs\t0.1\n"
    "cow\ttail\t0.1\n";

const char kCowAssoc[] =
    "horns\tcow:1\n"
    "hoofs\tcow:1\n"
    "tail\tcow:1\n";

const char kCowText[] = "horns hoofs tail\n";

// `innocence`. Close context favors one reading on the primary level; remote
// correlations on the secondary level favor the incompatible enlargement
// reached through `dreyfus -> trial -> military`.
const char kRaceLexicon[] =
    "girl\tgirl\n"
    "like\tlike\n"
    "dreyfus\tdreyfus\n"
    "army\tarmy\n"
    "not-believe\tdoubt\n"
    "innocence\tvirginity,guiltlessness\n"
    "said\tsaid\n";

const char kRaceModel[] =
    "bigram v1 smoothing=mle\n"
    "__BOS__\tgirl\t0.5\n"
    "__BOS__\tperson\t0.5\n"
    "girl\tlike\t0.8\n"
    "girl\tsimilarity\t0.2\n"
    "person\tsimilarity\t0.8\n"
    "person\tlike\t0.2\n"
    "like\tdreyfus\t0.8\n"
    "like\ttrial\t0.2\n"
    "similarity\ttrial\t0.8\n"
    "similarity\tdreyfus\t0.2\n"
    "dreyfus\tarmy\t0.8\n"
    "dreyfus\tmilitary\t0.2\n"
    "trial\tmilitary\t0.8\n"
    "trial\tarmy\t0.2\n"
    "army\tdoubt\t0.7\n"
    "army\tskepticism\t0.2\n"
    "army\tacquittal\t0.1\n"
    "military\tacquittal\t0.6\n"
    "military\tskepticism\t0.2\n"
    "military\tdoubt\t0.2\n"
    "doubt\tvirginity\t0.7\n"
    "doubt\tguiltlessness\t0.2\n"
    "doubt\tpurity\t0.1\n"
    "skepticism\tpurity\t0.3\n"
    "skepticism\tvirginity\t0.3\n"
    "skepticism\tguiltlessness\t0.4\n"
    "acquittal\tpurity\t0.6\n"
    "acquittal\tvirginity\t0.2\n"
    "acquittal\tguiltlessness\t0.2\n"
    "virginity\tsaid\t0.5\n"
    "virginity\tstatement\t0.5\n"
    "guiltlessness\tsaid\t0.5\n"
    "guiltlessness\tstatement\t0.5\n"
    "purity\tstatement\t0.8\n"
    "purity\tsaid\t0.2\n";

const char kRaceAssoc[] =
    "girl\tperson:1\n"
    "like\tsimilarity:1\n"
    "dreyfus\ttrial:1\n"
    "army\tmilitary:1\n"
    "doubt\tskepticism:1,acquittal:1\n"
    "virginity\tpurity:1\n"
    "said\tstatement:1\n";

const char kRaceExclusions[] = "virginity\tacquittal\n";

const char kRaceText[] = "girl like dreyfus army not-believe innocence said\n";

// Mixed corpus for the tau trade-off: the cedar-chest joke (retraction up to
// tau = 2), quick one-step flickers (retraction only at tau = 0), a
// long-windup joke whose ambiguity outlasts tau = 8, and plain fillers.
const char kSweepLexicon[] =
    "my-uncle\tuncle\n"
    "has\thave\n"
    "cedar\tcedar\n"
    "chest\tbox,breast\n"
    "so-he-had\tfurniture,anatomy\n"
    "wooden\ttimber,prosthetic\n"
    "leg\tleg\n"
    "fa\tfa\n"
    "fx\tfp,fq\n"
    "fr\tfr\n"
    "w0\tw0\n"
    "w1\tw1\n"
    "w2\tw2\n"
    "wamb\tga,gb\n"
    "c4\ta4,b4\n"
    "c5\ta5,b5\n"
    "c6\ta6,b6\n"
    "c7\ta7,b7\n"
    "c8\ta8,b8\n"
    "c9\ta9,b9\n"
    "c10\ta10,b10\n"
    "c11\ta11,b11\n"
    "c12\ta12,b12\n"
    "punch\tpunch\n"
    "p0\tp0\n"
    "p1\tp1\n"
    "p2\tp2\n"
    "p3\tp3\n";

const char kSweepModel[] =
    "bigram v1 smoothing=mle\n"
    "__BOS__\tuncle\t0.25\n"
    "__BOS__\tfa\t0.25\n"
    "__BOS__\tw0\t0.25\n"
    "__BOS__\tp0\t0.25\n"
    "uncle\thave\t1.0\n"
    "have\tcedar\t1.0\n"
    "cedar\tbox\t0.6\n"
    "cedar\tbreast\t0.3\n"
    "cedar\t__GAP__\t0.1\n"
    "box\tfurniture\t0.7\n"
    "box\tanatomy\t0.05\n"
    "box\t__GAP__\t0.25\n"
    "breast\tfurniture\t0.05\n"
    "breast\tanatomy\t0.7\n"
    "breast\t__GAP__\t0.25\n"
    "furniture\ttimber\t0.7\n"
    "furniture\tprosthetic\t0.05\n"
    "furniture\t__GAP__\t0.25\n"
    "anatomy\ttimber\t0.05\n"
    "anatomy\tprosthetic\t0.7\n"
    "anatomy\t__GAP__\t0.25\n"
    "timber\tleg\t0.02\n"
    "timber\t__GAP__\t0.98\n"
    "prosthetic\tleg\t0.9\n"
    "prosthetic\t__GAP__\t0.1\n"
    "__GAP__\t__GAP__\t0.5\n"
    "__GAP__\tleg\t0.5\n"
    "fa\tfp\t0.6\n"
    "fa\tfq\t0.3\n"
    "fa\t__GAP__\t0.1\n"
    "fp\tfr\t0.05\n"
    "fp\t__GAP__\t0.95\n"
    "fq\tfr\t0.9\n"
    "fq\t__GAP__\t0.1\n"
    "w0\tw1\t1.0\n"
    "w1\tw2\t1.0\n"
    "w2\tga\t0.6\n"
    "w2\tgb\t0.3\n"
    "w2\t__GAP__\t0.1\n"
    "ga\ta4\t0.9\n"
    "ga\tb4\t0.02\n"
    "ga\t__GAP__\t0.08\n"
    "gb\tb4\t0.9\n"
    "gb\ta4\t0.02\n"
    "gb\t__GAP__\t0.08\n"
    "a4\ta5\t0.9\n"
    "a4\tb5\t0.02\n"
    "a4\t__GAP__\t0.08\n"
    "b4\tb5\t0.9\n"
    "b4\ta5\t0.02\n"
    "b4\t__GAP__\t0.08\n"
    "a5\ta6\t0.9\n"
    "a5\tb6\t0.02\n"
    "a5\t__GAP__\t0.08\n"
    "b5\tb6\t0.9\n"
    "b5\ta6\t0.02\n"
    "b5\t__GAP__\t0.08\n"
    "a6\ta7\t0.9\n"
    "a6\tb7\t0.02\n"
    "a6\t__GAP__\t0.08\n"
    "b6\tb7\t0.9\n"
    "b6\ta7\t0.02\n"
    "b6\t__GAP__\t0.08\n"
    "a7\ta8\t0.9\n"
    "a7\tb8\t0.02\n"
    "a7\t__GAP__\t0.08\n"
    "b7\tb8\t0.9\n"
    "b7\ta8\t0.02\n"
    "b7\t__GAP__\t0.08\n"
    "a8\ta9\t0.9\n"
    "a8\tb9\t0.02\n"
    "a8\t__GAP__\t0.08\n"
    "b8\tb9\t0.9\n"
    "b8\ta9\t0.02\n"
    "b8\t__GAP__\t0.08\n"
    "a9\ta10\t0.9\n"
    "a9\tb10\t0.02\n"
    "a9\t__GAP__\t0.08\n"
    "b9\tb10\t0.9\n"
    "b9\ta10\t0.02\n"
    "b9\t__GAP__\t0.08\n"
    "a10\ta11\t0.9\n"
    "a10\tb11\t0.02\n"
    "a10\t__GAP__\t0.08\n"
    "b10\tb11\t0.9\n"
    "b10\ta11\t0.02\n"
    "b10\t__GAP__\t0.08\n"
    "a11\ta12\t0.9\n"
    "a11\tb12\t0.02\n"
    "a11\t__GAP__\t0.08\n"
    "b11\tb12\t0.9\n"
    "b11\ta12\t0.02\n"
    "b11\t__GAP__\t0.08\n"
    "a12\tpunch\t0.02\n"
    "a12\t__GAP__\t0.98\n"
    "b12\tpunch\t0.9\n"
    "b12\t__GAP__\t0.1\n"
    "p0\tp1\t1.0\n"
    "p1\tp2\t1.0\n"
    "p2\tp3\t1.0\n";

const char kSweepCorpus[] =
    "my-uncle has cedar chest so-he-had wooden leg\n"
    "fa fx fr\n"
    "fa fx fr\n"
    "fa fx fr\n"
    "w0 w1 w2 wamb c4 c5 c6 c7 c8 c9 c10 c11 c12 punch\n"
    "p0 p1 p2 p3\n"
    "p0 p1 p2 p3\n";

}  // namespace

const std::vector<Fixture>& all() {
  static const std::vector<Fixture> fixtures = {
      {"14", "cedar chest (switching scheme)", kJokeLexicon, kJokeModel,
       kJokeText, {}, {}},
      {"cow", "horns/hoofs/tail enlargement", kCowLexicon, kCowModel, kCowText,
       kCowAssoc, {}},
      {"race", "two-channel ambiguity scheme", kRaceLexicon, kRaceModel,
       kRaceText, kRaceAssoc, kRaceExclusions},
      {"sweep", "mixed corpus for the tau trade-off", kSweepLexicon,
       kSweepModel, kSweepCorpus, {}, {}},
  };
  return fixtures;
}

const Fixture* find(std::string_view id) {
  for (const Fixture& fixture : all()) {
    if (fixture.id == id) return &fixture;
  }
  return nullptr;
}

std::vector<SymbolId> parse_symbols(std::string_view line) {
  std::vector<SymbolId> symbols;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    symbols.push_back(token == "_" ? SymbolId(kGapSymbol) : SymbolId(token));
  }
  return symbols;
}

std::vector<std::vector<SymbolId>> parse_texts(std::string_view document) {
  std::vector<std::vector<SymbolId>> texts;
  std::istringstream in{std::string(document)};
  std::string line;
  while (std::getline(in, line)) {
    std::vector<SymbolId> symbols = parse_symbols(line);
    if (!symbols.empty()) texts.push_back(std::move(symbols));
  }
  return texts;
}

}  // namespace humor::fixtures
