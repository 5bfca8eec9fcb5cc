#include <random>

#include "doctest.h"
#include "humor/fixtures.hpp"
#include "humor/hierarchy.hpp"

using namespace humor;

namespace {

struct RaceFixture {
  Lexicon lex;
  BigramModel model;
  AssociationMap map;
  ExclusionList exclusions;
  std::vector<SymbolId> text;
};

RaceFixture race() {
  const fixtures::Fixture* fx = fixtures::find("race");
  REQUIRE(fx != nullptr);
  return {Lexicon::from_text(fx->lexicon), BigramModel::from_text(fx->model),
          AssociationMap::from_text(fx->assoc),
          ExclusionList::from_text(fx->exclusions),
          fixtures::parse_texts(fx->text).front()};
}

// Weighted exhaustive search used as the oracle for the enlargement fixture.
double walk(const BigramModel& model, const ScoredLattice& lattice,
            std::vector<int>& idx, std::size_t col, std::vector<int>& best_idx,
            double acc, double best) {
  if (col == lattice.window.size()) {
    if (best_idx.empty() || acc > best) {
      best_idx = idx;
      return acc;
    }
    return best;
  }
  for (std::size_t s = 0; s < lattice.window.columns[col].size(); ++s) {
    const ImageId prev =
        col == 0 ? ImageId(kBosImage) : lattice.window.columns[col - 1][idx[col - 1]];
    double step = model.log_transition(prev, lattice.window.columns[col][s]) +
                  lattice.bias[col][s];
    idx.push_back(static_cast<int>(s));
    best = walk(model, lattice, idx, col + 1, best_idx, acc + step, best);
    idx.pop_back();
  }
  return best;
}

}  // namespace

TEST_CASE("enlarging horns/hoofs/tail selects the repeated larger image") {
  const fixtures::Fixture* fx = fixtures::find("cow");
  REQUIRE(fx != nullptr);
  BigramModel model = BigramModel::from_text(fx->model);
  AssociationMap map = AssociationMap::from_text(fx->assoc);
  const std::vector<ImageId> primary{"horns", "hoofs", "tail"};

  ScoredLattice lattice = enlarge(primary, map, 2.0);
  REQUIRE(lattice.window.size() == 3);
  CHECK(lattice.window.columns[0] == std::vector<ImageId>{"horns", "cow"});
  CHECK(lattice.bias[0][0] == 0.0);
  CHECK(lattice.bias[0][1] == doctest::Approx(std::log(2.0)));

  ViterbiResult best = exact_viterbi(model, lattice.window, &lattice.bias);
  CHECK(best.images == std::vector<ImageId>{"cow", "cow", "cow"});

  std::vector<int> idx, oracle_idx;
  walk(model, lattice, idx, 0, oracle_idx, 0.0, 0.0);
  CHECK(best.senses == oracle_idx);

  CHECK(merge_repetitions(best.images) == std::vector<ImageId>{"cow"});
}

TEST_CASE("enlarge handles the empty and identity cases") {
  AssociationMap empty;
  CHECK(enlarge(std::vector<ImageId>{}, empty, 2.0).window.size() == 0);

  const std::vector<ImageId> primary{"a", "b"};
  ScoredLattice lattice = enlarge(primary, empty, 1.0);
  REQUIRE(lattice.window.size() == 2);
  CHECK(lattice.window.columns[0] == std::vector<ImageId>{"a"});
  CHECK(lattice.window.columns[1] == std::vector<ImageId>{"b"});

  BigramModel::Rows rows;
  rows[kBosImage]["a"] = 1.0;
  rows["a"]["b"] = 1.0;
  BigramModel model = BigramModel::from_rows(std::move(rows));
  CHECK(exact_viterbi(model, lattice.window, &lattice.bias).images == primary);
}

TEST_CASE("merge_repetitions collapses consecutive runs only") {
  CHECK(merge_repetitions(std::vector<ImageId>{"cow", "cow", "cow"}) ==
        std::vector<ImageId>{"cow"});
  CHECK(merge_repetitions(std::vector<ImageId>{}) == std::vector<ImageId>{});
  CHECK(merge_repetitions(std::vector<ImageId>{"a", "b", "b", "a"}) ==
        std::vector<ImageId>{"a", "b", "a"});
}

TEST_CASE("merge_repetitions is idempotent and never grows") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> len(0, 12);
  const std::vector<ImageId> alphabet{"a", "b", "c"};
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<ImageId> seq;
    for (int k = len(rng); k > 0; --k) seq.push_back(alphabet[pick(rng)]);
    auto once = merge_repetitions(seq);
    CHECK(merge_repetitions(once) == once);
    CHECK(once.size() <= seq.size());
  }
}

TEST_CASE("association map files round-trip") {
  AssociationMap map = AssociationMap::from_text("horns\tcow:1,beast:2\n");
  const AssociationMap::Parents* parents = map.find("horns");
  REQUIRE(parents != nullptr);
  CHECK(parents->size() == 2);
  CHECK((*parents)[1] == std::pair<ImageId, int>{"beast", 2});
  CHECK(AssociationMap::from_text(map.to_text()).to_text() == map.to_text());
  CHECK(map.find("absent") == nullptr);
  CHECK_THROWS_AS(AssociationMap::from_text("horns\n"), ParseError);
  CHECK_THROWS_AS(AssociationMap::from_text("horns\tcow\n"), ParseError);
}

TEST_CASE("exclusion lists are unordered") {
  ExclusionList list = ExclusionList::from_text("virginity\tacquittal\n");
  CHECK(list.excluded("virginity", "acquittal"));
  CHECK(list.excluded("acquittal", "virginity"));
  CHECK(!list.excluded("virginity", "purity"));
}

TEST_CASE("a faster primary channel wins deterministically") {
  RaceFixture fx = race();
  ChannelConfig fast{3, 0, 0, 1};
  ChannelConfig slow{1, 0, 1, 0};
  RaceTrace a = run_two_channels(fx.text, fx.lex, fx.model, fx.map, fx.exclusions,
                                 fast, slow, DecoderConfig{}, 2.0, 0);
  REQUIRE(a.first_channel.has_value());
  CHECK(*a.first_channel == kPrimaryChannel);

  RaceTrace b = run_two_channels(fx.text, fx.lex, fx.model, fx.map, fx.exclusions,
                                 fast, slow, DecoderConfig{}, 2.0, 0);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].channel == b.records[i].channel);
    CHECK(event_time(a.records[i].event) == event_time(b.records[i].event));
  }

  // exactly one humor record, in the lagging channel, plus one verdict
  int humor_count = 0, verdict_count = 0;
  for (const RaceRecord& record : a.records) {
    if (std::holds_alternative<HumorEvent>(record.event)) {
      ++humor_count;
      CHECK(record.channel == kSecondaryChannel);
    }
    if (std::holds_alternative<VerdictEvent>(record.event)) ++verdict_count;
  }
  CHECK(humor_count == 1);
  CHECK(verdict_count == 1);
}

TEST_CASE("swapping the channel configurations swaps the verdict") {
  RaceFixture fx = race();
  ChannelConfig patient{1, 0, 0, 3};
  ChannelConfig eager{1, 0, 1, 0};

  RaceTrace ab = run_two_channels(fx.text, fx.lex, fx.model, fx.map, fx.exclusions,
                                  patient, eager, DecoderConfig{}, 2.0, 0);
  RaceTrace ba = run_two_channels(fx.text, fx.lex, fx.model, fx.map, fx.exclusions,
                                  eager, patient, DecoderConfig{}, 2.0, 0);
  REQUIRE(ab.first_channel.has_value());
  REQUIRE(ba.first_channel.has_value());
  CHECK(*ab.first_channel == kSecondaryChannel);
  CHECK(*ba.first_channel == kPrimaryChannel);
}

TEST_CASE("with jitter the arrival order becomes elusive") {
  RaceFixture fx = race();
  bool primary_first = false, secondary_first = false;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    ChannelConfig cfg1{1, 1, 0, 1};
    ChannelConfig cfg2{1, 1, 1, 0};
    RaceTrace trace = run_two_channels(fx.text, fx.lex, fx.model, fx.map,
                                       fx.exclusions, cfg1, cfg2, DecoderConfig{},
                                       2.0, seed);
    if (!trace.first_channel) continue;
    if (*trace.first_channel == kPrimaryChannel) primary_first = true;
    if (*trace.first_channel == kSecondaryChannel) secondary_first = true;
  }
  CHECK(primary_first);
  CHECK(secondary_first);
}

TEST_CASE("per-channel timestamps never decrease") {
  RaceFixture fx = race();
  ChannelConfig cfg1{2, 1, 0, 1};
  ChannelConfig cfg2{1, 1, 1, 0};
  RaceTrace trace = run_two_channels(fx.text, fx.lex, fx.model, fx.map,
                                     fx.exclusions, cfg1, cfg2, DecoderConfig{},
                                     2.0, 4);
  int last[3] = {0, 0, 0};
  for (const RaceRecord& record : trace.records) {
    const int t = event_time(record.event);
    CHECK(t >= last[record.channel]);
    last[record.channel] = t;
  }
}
