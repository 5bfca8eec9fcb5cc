#include <sstream>

#include "doctest.h"
#include "humor/fixtures.hpp"
#include "humor/hierarchy.hpp"
#include "humor/sweep.hpp"
#include "humor/trace.hpp"

using namespace humor;

namespace {

struct SweepFixture {
  Lexicon lex;
  BigramModel model;
  std::vector<std::vector<SymbolId>> texts;
};

SweepFixture sweep_fixture() {
  const fixtures::Fixture* fx = fixtures::find("sweep");
  REQUIRE(fx != nullptr);
  return {Lexicon::from_text(fx->lexicon), BigramModel::from_text(fx->model),
          fixtures::parse_texts(fx->text)};
}

const std::vector<int> kGrid{0, 1, 2, 4, 8, 16};

}  // namespace

TEST_CASE("latency-only loss favors the greedy commit") {
  SweepFixture fx = sweep_fixture();
  SweepResult result =
      sweep_tau(fx.texts, fx.lex, fx.model, kGrid, 0.0, 1.0, DecoderConfig{});
  CHECK(result.tau_star == 0);
  for (std::size_t i = 1; i < result.rows.size(); ++i)
    CHECK(result.rows[i].mean_latency > result.rows[i - 1].mean_latency);
}

TEST_CASE("retraction-only loss favors the longest delay") {
  SweepFixture fx = sweep_fixture();
  SweepResult result =
      sweep_tau(fx.texts, fx.lex, fx.model, kGrid, 1.0, 0.0, DecoderConfig{});
  CHECK(result.tau_star == 16);
  CHECK(result.rows.back().retraction_rate == 0.0);
  for (std::size_t i = 1; i < result.rows.size(); ++i)
    CHECK(result.rows[i].retraction_rate <= result.rows[i - 1].retraction_rate);
  CHECK(result.rows.front().retraction_rate > 0.0);
  // the long-windup joke keeps retracting at tau=8, so the cap wins alone
  CHECK(result.rows[4].tau == 8);
  CHECK(result.rows[4].retraction_rate > 0.0);
}

TEST_CASE("the printed table recomputes its own loss column") {
  SweepFixture fx = sweep_fixture();
  const double alpha = 1.0, beta = 1.0;
  SweepResult result =
      sweep_tau(fx.texts, fx.lex, fx.model, kGrid, alpha, beta, DecoderConfig{});
  std::istringstream table(format_sweep_table(result));
  std::string header;
  std::getline(table, header);
  CHECK(header == "tau\tretraction_rate\tmean_latency\tloss");
  for (const SweepRow& row : result.rows) {
    std::string line;
    REQUIRE(std::getline(table, line));
    std::istringstream cells(line);
    int tau;
    double rate, latency, loss;
    cells >> tau >> rate >> latency >> loss;
    CHECK(tau == row.tau);
    CHECK(std::stod(format_probability(alpha * rate + beta * latency)) == loss);
  }
  std::string star;
  REQUIRE(std::getline(table, star));
  CHECK(star == "tau_star\t" + std::to_string(result.tau_star));
}

TEST_CASE("sweep validates its inputs") {
  SweepFixture fx = sweep_fixture();
  CHECK_THROWS_AS(sweep_tau({}, fx.lex, fx.model, kGrid, 1, 1, DecoderConfig{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      sweep_tau(fx.texts, fx.lex, fx.model, {}, 1, 1, DecoderConfig{}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      sweep_tau(fx.texts, fx.lex, fx.model, {2, 1}, 1, 1, DecoderConfig{}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      sweep_tau(fx.texts, fx.lex, fx.model, kGrid, -1, 1, DecoderConfig{}),
      std::invalid_argument);
}

TEST_CASE("humor records are chased by one laughter record at the same step") {
  HumorEvent humor;
  humor.t = 6;
  humor.from = 3;
  humor.to = 4;
  humor.old_images = {"box"};
  humor.new_images = {"breast"};

  std::ostringstream out;
  TraceWriter writer(out, LaughterParams{}, 0);
  writer.write(Event(humor));
  writer.write(Event(CommitEvent{6, 4, 5, {"anatomy"}}));

  std::istringstream lines(out.str());
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line.find("\"type\":\"humor\"") != std::string::npos);
  CHECK(line.find("\"t\":6") != std::string::npos);
  REQUIRE(std::getline(lines, line));
  CHECK(line.find("\"type\":\"laughter\"") != std::string::npos);
  CHECK(line.find("\"t\":6") != std::string::npos);
  CHECK(line.find("\"nervous\":false") != std::string::npos);
  REQUIRE(std::getline(lines, line));
  CHECK(line.find("\"type\":\"commit\"") != std::string::npos);
}

TEST_CASE("json lines carry offsets and channel labels") {
  CommitEvent commit{2, 0, 1, {"girl"}};
  std::string line = event_to_json_line(Event(commit), 10, "primary");
  CHECK(line.find("\"t\":12") != std::string::npos);
  CHECK(line.find("\"channel\":\"primary\"") != std::string::npos);

  EmotionEvent emotion{1, sample_emotions(-0.5, std::nullopt, EmotionConfig{})};
  std::string em = event_to_json_line(Event(emotion));
  CHECK(em.find("\"confidence\":null") != std::string::npos);
  CHECK(em.find("\"pcomp\":null") != std::string::npos);
}

TEST_CASE("bundled fixtures parse in every declared format") {
  for (const auto& fx : fixtures::all()) {
    CHECK_NOTHROW(BigramModel::from_text(fx.model));
    if (fx.id != "cow") CHECK(!fixtures::parse_texts(fx.text).empty());
    CHECK_NOTHROW(Lexicon::from_text(fx.lexicon));
    if (!fx.assoc.empty()) CHECK_NOTHROW(AssociationMap::from_text(fx.assoc));
    if (!fx.exclusions.empty())
      CHECK_NOTHROW(ExclusionList::from_text(fx.exclusions));
  }
}

TEST_CASE("gap shorthand expands while other tokens pass through") {
  auto texts = fixtures::parse_texts("a _ b\n\nc\n");
  REQUIRE(texts.size() == 2);
  CHECK(texts[0] == std::vector<SymbolId>{"a", kGapSymbol, "b"});
  CHECK(texts[1] == std::vector<SymbolId>{"c"});
}
