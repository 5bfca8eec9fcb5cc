#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "humor/decoder.hpp"
#include "humor/emotions.hpp"
#include "humor/fixtures.hpp"
#include "humor/hierarchy.hpp"
#include "humor/laughter.hpp"
#include "humor/lexicon.hpp"
#include "humor/ngram.hpp"
#include "humor/sweep.hpp"
#include "humor/trace.hpp"

namespace py = pybind11;
using namespace humor;

namespace {

Smoothing make_smoothing(const std::string& name, double alpha) {
  if (name == "mle") return Smoothing::mle();
  if (name == "addone") return Smoothing::add_one(alpha);
  throw std::invalid_argument("smoothing must be 'mle' or 'addone'");
}

DecoderConfig make_config(std::optional<int> tau, int memory, double p_low,
                          bool suppress) {
  DecoderConfig cfg;
  cfg.tau_max = tau;
  cfg.memory_budget = memory;
  cfg.p_low = p_low;
  cfg.suppression_enabled = suppress;
  return cfg;
}

std::vector<std::string> events_to_lines(const std::vector<Event>& events) {
  std::vector<std::string> lines;
  lines.reserve(events.size());
  for (const Event& event : events) lines.push_back(event_to_json_line(event));
  return lines;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Incremental ambiguity decoding with retraction detection";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OovError>(m, "OovError", PyExc_KeyError);

  py::class_<Lexicon>(m, "Lexicon")
      .def_static("from_text", &Lexicon::from_text)
      .def("senses", &Lexicon::senses, py::arg("symbol"),
           py::return_value_policy::copy)
      .def("to_text", &Lexicon::to_text)
      .def("__eq__", [](const Lexicon& a, const Lexicon& b) { return a == b; });

  py::class_<BigramModel>(m, "BigramModel")
      .def_static(
          "train",
          [](const std::vector<std::vector<ImageId>>& corpus,
             const std::string& smoothing, double alpha) {
            return BigramModel::train(corpus, make_smoothing(smoothing, alpha));
          },
          py::arg("corpus"), py::arg("smoothing") = "mle", py::arg("alpha") = 1.0)
      .def_static("from_text", &BigramModel::from_text)
      .def("to_text", &BigramModel::to_text)
      .def("transition_prob", &BigramModel::transition_prob)
      .def("score_trajectory",
           [](const BigramModel& model, const std::vector<ImageId>& trajectory) {
             return model.score_trajectory(trajectory);
           })
      .def("vocab", [](const BigramModel& model) {
        return std::vector<ImageId>(model.vocab().begin(), model.vocab().end());
      });

  m.def(
      "exact_viterbi",
      [](const BigramModel& model, const std::vector<std::vector<ImageId>>& columns,
         std::optional<std::vector<std::vector<double>>> bias, std::size_t cap) {
        LatticeWindow window{columns};
        ViterbiResult result =
            exact_viterbi(model, window, bias ? &*bias : nullptr, cap);
        return py::make_tuple(result.images, result.score);
      },
      py::arg("model"), py::arg("columns"), py::arg("bias") = std::nullopt,
      py::arg("cap") = 1000000);

  py::class_<DecoderState>(m, "DecoderState")
      .def(py::init<>())
      .def_readonly("committed", &DecoderState::committed)
      .def_readonly("front_a", &DecoderState::front_a)
      .def_readonly("commit_c", &DecoderState::commit_c);

  m.def(
      "run_text",
      [](const BigramModel& model, const Lexicon& lex,
         const std::vector<SymbolId>& text, std::optional<int> tau, int memory,
         double p_low, bool suppress, DecoderState* state) {
        Decoder decoder(model, lexicon_senses(lex),
                        make_config(tau, memory, p_low, suppress));
        if (state) return events_to_lines(decoder.run(text, *state));
        Trace trace = decoder.run(text);
        return events_to_lines(trace.events);
      },
      py::arg("model"), py::arg("lexicon"), py::arg("text"),
      py::arg("tau") = std::optional<int>(2), py::arg("memory") = 64,
      py::arg("p_low") = -6.0, py::arg("suppress") = false,
      py::arg("state") = static_cast<DecoderState*>(nullptr),
      "Decode one text; returns the trace as JSON lines. Passing a "
      "DecoderState keeps its suppression store across runs.");

  m.def("commit_index", &commit_index, py::arg("front_a"), py::arg("branch_b"),
        py::arg("tau_max") = std::optional<int>());
  m.def("context_signature",
        [](const std::vector<ImageId>& tail, int window) {
          return context_signature(tail, window);
        },
        py::arg("tail"), py::arg("window") = 2);

  m.def("simonov", &simonov, py::arg("need"), py::arg("info"), py::arg("baseline"));
  m.def(
      "sample_emotions",
      [](double best, std::optional<double> runner_up, double need,
         double i0_pleasure, double i0_confidence) {
        EmotionSample sample = sample_emotions(
            best, runner_up, EmotionConfig{need, i0_pleasure, i0_confidence});
        return py::make_tuple(sample.pleasure, sample.confidence);
      },
      py::arg("best"), py::arg("runner_up") = std::nullopt, py::arg("need") = 1.0,
      py::arg("i0_pleasure") = -3.0, py::arg("i0_confidence") = 0.0);

  py::class_<SpinNetwork>(m, "SpinNetwork")
      .def_static("make", &SpinNetwork::make, py::arg("n"), py::arg("seed") = 0)
      .def("set_coupling", &SpinNetwork::set_coupling)
      .def("set_spin",
           [](SpinNetwork& net, int i, int value) {
             if (value != 1 && value != -1)
               throw std::invalid_argument("spin must be +1 or -1");
             net.sigma.at(i) = value;
           })
      .def_property_readonly("sigma",
                             [](const SpinNetwork& net) { return net.sigma; })
      .def_readwrite("field", &SpinNetwork::field)
      .def_readwrite("temperature", &SpinNetwork::temperature);

  py::class_<NullifyReport>(m, "NullifyReport")
      .def_readonly("sweeps_used", &NullifyReport::sweeps_used)
      .def_readonly("energy_to_reservoir", &NullifyReport::energy_to_reservoir)
      .def_readonly("final_all_down", &NullifyReport::final_all_down)
      .def_readonly("motor_share", &NullifyReport::motor_share)
      .def_readonly("limbic_share", &NullifyReport::limbic_share);

  m.def("energy", &energy);
  m.def("glauber_sweep", &glauber_sweep);
  m.def("nullify", &nullify, py::arg("net"), py::arg("field_strength"),
        py::arg("max_sweeps"), py::arg("routing_rho") = 1.0);
  m.def(
      "laughter_from_retraction",
      [](std::size_t k, int spins_per_image, double coupling_scale, double rho,
         std::uint64_t seed) {
        LaughterParams params;
        params.spins_per_image = spins_per_image;
        params.coupling_scale = coupling_scale;
        params.routing_rho = rho;
        return laughter_from_retraction(k, params, seed);
      },
      py::arg("retracted_length"), py::arg("spins_per_image") = 4,
      py::arg("coupling_scale") = 0.05, py::arg("routing_rho") = 1.0,
      py::arg("seed") = 0);
  m.def(
      "forced_deletion",
      [](std::size_t length, int spins_per_image, double coupling_scale,
         double rho, std::uint64_t seed) {
        LaughterParams params;
        params.spins_per_image = spins_per_image;
        params.coupling_scale = coupling_scale;
        params.routing_rho = rho;
        return forced_deletion(length, params, seed);
      },
      py::arg("content_length"), py::arg("spins_per_image") = 4,
      py::arg("coupling_scale") = 0.05, py::arg("routing_rho") = 1.0,
      py::arg("seed") = 0);

  py::class_<AssociationMap>(m, "AssociationMap")
      .def_static("from_text", &AssociationMap::from_text)
      .def("to_text", &AssociationMap::to_text);

  m.def(
      "enlarge",
      [](const std::vector<ImageId>& primary, const AssociationMap& map,
         double lam) {
        ScoredLattice lattice = enlarge(primary, map, lam);
        return py::make_tuple(lattice.window.columns, lattice.bias);
      },
      py::arg("primary"), py::arg("map"), py::arg("lambda_") = 2.0);
  m.def("merge_repetitions", [](const std::vector<ImageId>& trajectory) {
    return merge_repetitions(trajectory);
  });

  py::class_<ExclusionList>(m, "ExclusionList")
      .def(py::init<>())
      .def_static("from_text", &ExclusionList::from_text)
      .def("excluded", &ExclusionList::excluded);

  m.def(
      "run_two_channels",
      [](const std::vector<SymbolId>& text, const Lexicon& lex,
         const BigramModel& model, const AssociationMap& map,
         const ExclusionList& exclusions, int rate1, int rate2, int jitter,
         std::optional<int> tau1, std::optional<int> tau2, double lam,
         std::uint64_t seed) {
        ChannelConfig cfg1{rate1, jitter, 0, tau1};
        ChannelConfig cfg2{rate2, jitter, 1, tau2};
        RaceTrace race = run_two_channels(text, lex, model, map, exclusions,
                                          cfg1, cfg2, DecoderConfig{}, lam, seed);
        std::vector<std::string> lines;
        for (const RaceRecord& record : race.records) {
          std::optional<std::string_view> channel;
          if (record.channel == kPrimaryChannel) channel = "primary";
          else if (record.channel == kSecondaryChannel) channel = "secondary";
          lines.push_back(event_to_json_line(record.event, 0, channel));
        }
        py::object first = py::none();
        if (race.first_channel)
          first = py::str(*race.first_channel == kPrimaryChannel ? "primary"
                                                                 : "secondary");
        return py::make_tuple(lines, first);
      },
      py::arg("text"), py::arg("lexicon"), py::arg("model"), py::arg("map"),
      py::arg("exclusions") = ExclusionList(), py::arg("rate1") = 2,
      py::arg("rate2") = 1, py::arg("jitter") = 0,
      py::arg("tau1") = std::optional<int>(2),
      py::arg("tau2") = std::optional<int>(0), py::arg("lambda_") = 2.0,
      py::arg("seed") = 0);

  m.def(
      "sweep_tau",
      [](const std::vector<std::vector<SymbolId>>& texts, const Lexicon& lex,
         const BigramModel& model, const std::vector<int>& grid, double alpha,
         double beta) {
        SweepResult result =
            sweep_tau(texts, lex, model, grid, alpha, beta, DecoderConfig{});
        std::vector<py::tuple> rows;
        for (const SweepRow& row : result.rows)
          rows.push_back(py::make_tuple(row.tau, row.retraction_rate,
                                        row.mean_latency, row.loss));
        return py::make_tuple(rows, result.tau_star);
      },
      py::arg("texts"), py::arg("lexicon"), py::arg("model"), py::arg("grid"),
      py::arg("alpha") = 1.0, py::arg("beta") = 1.0);

  m.def("fixture", [](const std::string& id) {
    const fixtures::Fixture* fixture = fixtures::find(id);
    if (!fixture) throw std::invalid_argument("unknown fixture: " + id);
    py::dict d;
    d["id"] = std::string(fixture->id);
    d["title"] = std::string(fixture->title);
    d["lexicon"] = std::string(fixture->lexicon);
    d["model"] = std::string(fixture->model);
    d["text"] = std::string(fixture->text);
    d["assoc"] = std::string(fixture->assoc);
    d["exclusions"] = std::string(fixture->exclusions);
    return d;
  });
  m.def("parse_texts", [](const std::string& document) {
    return fixtures::parse_texts(document);
  });
}
