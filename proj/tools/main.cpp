#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "humor/decoder.hpp"
#include "humor/fixtures.hpp"
#include "humor/hierarchy.hpp"
#include "humor/laughter.hpp"
#include "humor/lexicon.hpp"
#include "humor/ngram.hpp"
#include "humor/sweep.hpp"
#include "humor/trace.hpp"

namespace {

using namespace humor;

// Exit codes: 0 success, 1 input error, 2 config contradiction.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<int> parse_tau(const std::string& text) {
  if (text == "unbounded") return std::nullopt;
  try {
    std::size_t used = 0;
    int tau = std::stoi(text, &used);
    if (used != text.size() || tau < 0) throw std::invalid_argument(text);
    return tau;
  } catch (const std::exception&) {
    throw ConfigError("--tau expects a nonnegative integer or 'unbounded'");
  }
}

std::vector<std::vector<ImageId>> load_corpus(const std::string& path) {
  std::vector<std::vector<ImageId>> corpus;
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream items(line);
    std::vector<ImageId> sequence;
    std::string token;
    while (items >> token) sequence.push_back(token);
    if (!sequence.empty()) corpus.push_back(std::move(sequence));
  }
  return corpus;
}

std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> grid;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      grid.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ConfigError("--grid expects comma-separated integers");
    }
  }
  return grid;
}

struct RunOptions {
  std::string tau = "2";
  int memory = 64;
  double p_low = -6.0;
  double rho = 1.0;
  std::uint64_t seed = 0;
  bool suppress = false;
  std::string assoc;
  std::string exclusions;
  bool two_channel = false;
};

void add_run_flags(CLI::App* cmd, RunOptions& opts) {
  cmd->add_option("--tau", opts.tau, "commit delay bound in steps, or 'unbounded'");
  cmd->add_option("--memory", opts.memory, "operative memory in trajectory-symbols");
  cmd->add_option("--plow", opts.p_low, "per-symbol log-prob threshold for incomprehension");
  cmd->add_option("--rho", opts.rho, "fraction of released energy routed to the motor channel");
  cmd->add_option("--seed", opts.seed, "base seed for all derived randomness");
  cmd->add_flag("--suppress", opts.suppress, "remember retracted readings (hackneyed jokes)");
  cmd->add_option("--assoc", opts.assoc, "association map file for the secondary level");
  cmd->add_option("--exclusions", opts.exclusions, "cross-channel exclusion pairs file");
  cmd->add_flag("--two-channel", opts.two_channel, "race the primary and secondary channels");
}

DecoderConfig decoder_config(const RunOptions& opts) {
  DecoderConfig cfg;
  cfg.tau_max = parse_tau(opts.tau);
  cfg.memory_budget = opts.memory;
  cfg.p_low = opts.p_low;
  cfg.suppression_enabled = opts.suppress;
  return cfg;
}

LaughterParams laughter_params(const RunOptions& opts) {
  LaughterParams params;
  params.routing_rho = opts.rho;
  return params;
}

void run_single_channel(const Lexicon& lex, const BigramModel& model,
                        const std::vector<std::vector<SymbolId>>& texts,
                        const RunOptions& opts, std::ostream& out) {
  Decoder decoder(model, lexicon_senses(lex), decoder_config(opts));
  TraceWriter writer(out, laughter_params(opts), opts.seed);
  DecoderState state;
  int offset = 0;
  for (const auto& text : texts) {
    for (const Event& event : decoder.run(text, state)) writer.write(event, offset);
    offset += static_cast<int>(text.size()) + 1;
  }
}

void run_two_channel(const Lexicon& lex, const BigramModel& model,
                     const std::vector<std::vector<SymbolId>>& texts,
                     const RunOptions& opts, std::ostream& out) {
  if (opts.assoc.empty())
    throw ConfigError("--two-channel requires --assoc");
  AssociationMap map = AssociationMap::from_file(opts.assoc);
  ExclusionList exclusions;
  if (!opts.exclusions.empty())
    exclusions = ExclusionList::from_file(opts.exclusions);

  DecoderConfig base = decoder_config(opts);
  ChannelConfig cfg1{2, 1, 0, base.tau_max};
  ChannelConfig cfg2{1, 1, 1, base.tau_max};

  TraceWriter writer(out, laughter_params(opts), opts.seed);
  int offset = 0;
  for (const auto& text : texts) {
    RaceTrace race = run_two_channels(text, lex, model, map, exclusions, cfg1,
                                      cfg2, base, 2.0, opts.seed);
    int max_t = 0;
    for (const RaceRecord& record : race.records) {
      std::optional<std::string_view> channel;
      if (record.channel == kPrimaryChannel) channel = "primary";
      else if (record.channel == kSecondaryChannel) channel = "secondary";
      writer.write(record.event, offset, channel);
      max_t = std::max(max_t, event_time(record.event));
    }
    offset += max_t + 1;
  }
}

int cmd_train(const std::string& corpus_path, const std::string& out_path,
              const std::string& smoothing_name, double alpha) {
  auto corpus = load_corpus(corpus_path);
  Smoothing smoothing;
  if (smoothing_name == "mle") {
    smoothing = Smoothing::mle();
  } else if (smoothing_name == "addone") {
    smoothing = Smoothing::add_one(alpha);
  } else {
    throw ConfigError("--smoothing expects 'mle' or 'addone'");
  }
  BigramModel model = BigramModel::train(corpus, smoothing);
  model.save(out_path);
  std::cout << "vocab " << model.vocab().size() - 1 << " rows "
            << model.rows().size() << "\n";
  return 0;
}

int cmd_run(const std::string& text_path, const std::string& lexicon_path,
            const std::string& model_path, const RunOptions& opts) {
  Lexicon lex = Lexicon::from_file(lexicon_path);
  BigramModel model = BigramModel::from_file(model_path);
  auto texts = fixtures::parse_texts(read_file(text_path));
  if (opts.two_channel) {
    run_two_channel(lex, model, texts, opts, std::cout);
  } else {
    run_single_channel(lex, model, texts, opts, std::cout);
  }
  return 0;
}

int cmd_sweep(const std::string& corpus_path, const std::string& lexicon_path,
              const std::string& model_path, const std::string& grid_text,
              double alpha, double beta, const RunOptions& opts) {
  Lexicon lex = Lexicon::from_file(lexicon_path);
  BigramModel model = BigramModel::from_file(model_path);
  auto texts = fixtures::parse_texts(read_file(corpus_path));
  if (texts.empty()) throw ParseError("corpus is empty: " + corpus_path);

  DecoderConfig base = decoder_config(opts);
  SweepResult result =
      sweep_tau(texts, lex, model, parse_grid(grid_text), alpha, beta, base);
  std::cout << format_sweep_table(result);
  return 0;
}

int cmd_demo(const std::string& id) {
  const fixtures::Fixture* fixture = fixtures::find(id);
  if (!fixture) {
    std::cerr << "unknown demo '" << id << "'; available:";
    for (const auto& f : fixtures::all()) std::cerr << ' ' << f.id;
    std::cerr << "\n";
    return 1;
  }
  std::cout << "# demo " << fixture->id << ": " << fixture->title << "\n";
  BigramModel model = BigramModel::from_text(fixture->model);
  auto texts = fixtures::parse_texts(fixture->text);
  RunOptions opts;

  if (fixture->id == "sweep") {
    Lexicon lex = Lexicon::from_text(fixture->lexicon);
    SweepResult result = sweep_tau(texts, lex, model, {0, 1, 2, 4, 8, 16}, 1.0,
                                   1.0, DecoderConfig{});
    std::cout << format_sweep_table(result);
    return 0;
  }

  if (fixture->id == "cow") {
    AssociationMap map = AssociationMap::from_text(fixture->assoc);
    Decoder decoder(model, association_senses(map, 2.0), DecoderConfig{});
    Trace trace = decoder.run(texts.front());
    TraceWriter writer(std::cout, laughter_params(opts), opts.seed);
    for (const Event& event : trace.events) writer.write(event);
    std::cout << "# secondary succession:";
    for (const ImageId& img : trace.final_state.committed) std::cout << ' ' << img;
    std::cout << "\n# merged:";
    for (const ImageId& img : merge_repetitions(trace.final_state.committed))
      std::cout << ' ' << img;
    std::cout << "\n";
    return 0;
  }

  Lexicon lex = Lexicon::from_text(fixture->lexicon);
  if (fixture->id == "race") {
    AssociationMap map = AssociationMap::from_text(fixture->assoc);
    ExclusionList exclusions = ExclusionList::from_text(fixture->exclusions);
    ChannelConfig cfg1{3, 0, 0, 1};
    ChannelConfig cfg2{1, 0, 1, 0};
    RaceTrace race = run_two_channels(texts.front(), lex, model, map, exclusions,
                                      cfg1, cfg2, DecoderConfig{}, 2.0, opts.seed);
    TraceWriter writer(std::cout, laughter_params(opts), opts.seed);
    for (const RaceRecord& record : race.records) {
      std::optional<std::string_view> channel;
      if (record.channel == kPrimaryChannel) channel = "primary";
      else if (record.channel == kSecondaryChannel) channel = "secondary";
      writer.write(record.event, 0, channel);
    }
    if (race.first_channel) {
      std::cout << "# first version to consciousness: "
                << (*race.first_channel == kPrimaryChannel ? "primary" : "secondary")
                << "\n";
    }
    return 0;
  }

  // The switching-scheme joke: annotate each retraction.
  Decoder decoder(model, lexicon_senses(lex), DecoderConfig{});
  Trace trace = decoder.run(texts.front());
  TraceWriter writer(std::cout, laughter_params(opts), opts.seed);
  for (const Event& event : trace.events) {
    writer.write(event);
    if (const HumorEvent* humor = std::get_if<HumorEvent>(&event)) {
      std::cout << "# retraction at positions " << humor->from << ".." << humor->to
                << ":";
      for (const ImageId& img : humor->old_images) std::cout << ' ' << img;
      std::cout << " ->";
      for (const ImageId& img : humor->new_images) std::cout << ' ' << img;
      std::cout << "\n";
    }
  }
  std::cout << "# committed:";
  for (const ImageId& img : trace.final_state.committed) std::cout << ' ' << img;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"incremental ambiguity decoding with retraction detection"};
  app.require_subcommand(1);

  auto* train = app.add_subcommand("train", "train a bigram model from an image corpus");
  std::string corpus_path, out_path, smoothing = "mle";
  double alpha = 1.0;
  train->add_option("corpus", corpus_path, "corpus file, one image sequence per line")
      ->required();
  train->add_option("out", out_path, "output model file")->required();
  train->add_option("--smoothing", smoothing, "mle or addone");
  train->add_option("--alpha", alpha, "add-one pseudo-count");

  auto* run = app.add_subcommand("run", "decode a text to a JSON-lines trace");
  std::string text_path, lexicon_path, model_path;
  RunOptions run_opts;
  run->add_option("text", text_path, "text file, one text per line")->required();
  run->add_option("lexicon", lexicon_path, "lexicon file")->required();
  run->add_option("model", model_path, "bigram model file")->required();
  add_run_flags(run, run_opts);

  auto* sweep = app.add_subcommand("sweep-tau", "sweep the commit delay bound");
  std::string sweep_corpus, sweep_lexicon, sweep_model, grid = "0,1,2,4,8,16";
  double sweep_alpha = 1.0, sweep_beta = 1.0;
  RunOptions sweep_opts;
  sweep->add_option("corpus", sweep_corpus, "text corpus, one text per line")->required();
  sweep->add_option("lexicon", sweep_lexicon, "lexicon file")->required();
  sweep->add_option("model", sweep_model, "bigram model file")->required();
  sweep->add_option("--grid", grid, "comma-separated tau values");
  sweep->add_option("--alpha", sweep_alpha, "weight of the retraction rate");
  sweep->add_option("--beta", sweep_beta, "weight of the mean latency");
  sweep->add_option("--memory", sweep_opts.memory, "operative memory budget");
  sweep->add_option("--plow", sweep_opts.p_low, "incomprehension threshold");

  auto* demo = app.add_subcommand("demo", "run a bundled joke fixture");
  std::string demo_id;
  demo->add_option("id", demo_id, "fixture id (14, cow, race, sweep)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*train) return cmd_train(corpus_path, out_path, smoothing, alpha);
    if (*run) return cmd_run(text_path, lexicon_path, model_path, run_opts);
    if (*sweep)
      return cmd_sweep(sweep_corpus, sweep_lexicon, sweep_model, grid,
                       sweep_alpha, sweep_beta, sweep_opts);
    if (*demo) return cmd_demo(demo_id);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
