#include "humor/ngram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace humor {
namespace {

constexpr double kRowSumTolerance = 1e-9;

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ParseError("model line " + std::to_string(line) + ": " + message);
}

}  // namespace

Smoothing Smoothing::add_one(double alpha) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("add-one smoothing needs alpha > 0");
  return {Kind::kAddOne, alpha};
}

std::string format_probability(double p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", p);
  return buf;
}

BigramModel BigramModel::train(const std::vector<std::vector<ImageId>>& corpus,
                               Smoothing smoothing) {
  if (corpus.empty()) throw std::invalid_argument("empty corpus");

  std::set<ImageId> images;
  std::map<ImageId, std::map<ImageId, std::uint64_t>> counts;
  std::map<ImageId, std::uint64_t> totals;
  for (const auto& sequence : corpus) {
    ImageId prev = kBosImage;
    for (const ImageId& img : sequence) {
      if (img == kBosImage)
        throw std::invalid_argument("corpus sequence contains BOS image");
      images.insert(img);
      ++counts[prev][img];
      ++totals[prev];
      prev = img;
    }
  }
  if (images.empty()) throw std::invalid_argument("empty corpus");

  Rows rows;
  if (smoothing.kind == Smoothing::Kind::kMle) {
    for (const auto& [from, row] : counts) {
      for (const auto& [to, c] : row) {
        rows[from][to] = static_cast<double>(c) / static_cast<double>(totals[from]);
      }
    }
  } else {
    // Smoothed rows are stored for every source in the vocabulary, so a
    // loaded model answers unseen pairs without access to the raw counts.
    std::set<ImageId> sources = images;
    sources.insert(kBosImage);
    const double denom_add = smoothing.alpha * static_cast<double>(images.size());
    for (const ImageId& from : sources) {
      const auto total_it = totals.find(from);
      const double total =
          total_it == totals.end() ? 0.0 : static_cast<double>(total_it->second);
      const auto row_it = counts.find(from);
      for (const ImageId& to : images) {
        double c = 0.0;
        if (row_it != counts.end()) {
          auto cell = row_it->second.find(to);
          if (cell != row_it->second.end()) c = static_cast<double>(cell->second);
        }
        rows[from][to] = (c + smoothing.alpha) / (total + denom_add);
      }
    }
  }
  return from_rows(std::move(rows), smoothing);
}

BigramModel BigramModel::from_rows(Rows rows, Smoothing smoothing) {
  BigramModel model;
  model.smoothing_ = smoothing;
  for (const auto& [from, row] : rows) {
    model.vocab_.insert(from);
    double sum = 0.0;
    for (const auto& [to, p] : row) {
      if (to == kBosImage)
        throw std::invalid_argument("BOS may not appear as a destination");
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability out of range for " + from +
                                    " -> " + to);
      model.vocab_.insert(to);
      sum += p;
    }
    if (!row.empty() && std::abs(sum - 1.0) > kRowSumTolerance)
      throw std::invalid_argument("row for '" + from + "' sums to " +
                                  std::to_string(sum));
  }
  model.vocab_.insert(kBosImage);
  model.rows_ = std::move(rows);
  return model;
}

double BigramModel::transition_prob(const ImageId& from, const ImageId& to) const {
  if (to == kBosImage)
    throw std::invalid_argument("BOS may not appear as a destination");
  if (!vocab_.count(from)) throw std::invalid_argument("unknown image: " + from);
  if (!vocab_.count(to)) throw std::invalid_argument("unknown image: " + to);
  auto row = rows_.find(from);
  if (row == rows_.end()) return 0.0;
  auto cell = row->second.find(to);
  return cell == row->second.end() ? 0.0 : cell->second;
}

double BigramModel::log_transition(const ImageId& from, const ImageId& to) const {
  const double p = transition_prob(from, to);
  return p > 0.0 ? std::log(p) : kLogZero;
}

double BigramModel::score_trajectory(std::span<const ImageId> trajectory) const {
  double score = 0.0;
  const ImageId* prev = nullptr;
  for (const ImageId& img : trajectory) {
    if (img == kBosImage)
      throw std::invalid_argument("trajectory contains BOS image");
    score += prev ? log_transition(*prev, img)
                  : log_transition(kBosImage, img);
    prev = &img;
  }
  return score;
}

ViterbiResult exact_viterbi(const BigramModel& model, const LatticeWindow& window,
                            const std::vector<std::vector<double>>* bias,
                            std::size_t enumeration_cap) {
  const std::size_t n = window.size();
  if (bias && bias->size() != n)
    throw std::invalid_argument("bias shape does not match lattice");
  std::size_t total = 1;
  for (std::size_t c = 0; c < n; ++c) {
    const auto& col = window.columns[c];
    if (col.empty()) throw std::invalid_argument("empty lattice column");
    if (bias && (*bias)[c].size() != col.size())
      throw std::invalid_argument("bias shape does not match lattice");
    if (total > enumeration_cap / col.size())
      throw std::invalid_argument("lattice exceeds enumeration cap");
    total *= col.size();
  }

  ViterbiResult best;
  if (n == 0) return best;
  best.score = kLogZero;

  std::vector<int> idx(n, 0);
  bool have_best = false;
  while (true) {
    double score = 0.0;
    const ImageId* prev = nullptr;
    for (std::size_t c = 0; c < n; ++c) {
      const ImageId& img = window.columns[c][idx[c]];
      score += model.log_transition(prev ? *prev : ImageId(kBosImage), img);
      if (bias) score += (*bias)[c][idx[c]];
      prev = &img;
    }
    // Strict improvement keeps the earliest enumeration order, which is
    // exactly the lowest-column-index tie-break.
    if (!have_best || score > best.score) {
      have_best = true;
      best.score = score;
      best.senses = idx;
    }
    std::size_t c = n;
    while (c > 0) {
      --c;
      if (++idx[c] < static_cast<int>(window.columns[c].size())) break;
      idx[c] = 0;
      if (c == 0) {
        best.images.reserve(n);
        for (std::size_t k = 0; k < n; ++k)
          best.images.push_back(window.columns[k][best.senses[k]]);
        return best;
      }
    }
  }
}

std::string BigramModel::to_text() const {
  std::ostringstream out;
  out << "bigram v1 smoothing=";
  if (smoothing_.kind == Smoothing::Kind::kMle) {
    out << "mle";
  } else {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", smoothing_.alpha);
    out << "addone:" << buf;
  }
  out << '\n';
  for (const auto& [from, row] : rows_) {
    for (const auto& [to, p] : row) {
      out << from << '\t' << to << '\t' << format_probability(p) << '\n';
    }
  }
  return out.str();
}

void BigramModel::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write model file: " + path);
  out << to_text();
}

BigramModel BigramModel::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError("model file is empty");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  Smoothing smoothing;
  const std::string prefix = "bigram v1 smoothing=";
  if (line.rfind(prefix, 0) != 0) fail(line_no, "bad header");
  std::string mode = line.substr(prefix.size());
  if (mode == "mle") {
    smoothing = Smoothing::mle();
  } else if (mode.rfind("addone:", 0) == 0) {
    try {
      smoothing = Smoothing::add_one(std::stod(mode.substr(7)));
    } catch (const std::exception&) {
      fail(line_no, "bad add-one alpha");
    }
  } else {
    fail(line_no, "unknown smoothing mode '" + mode + "'");
  }

  Rows rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) fail(line_no, "expected i<TAB>j<TAB>p");
    std::string from = line.substr(0, t1);
    std::string to = line.substr(t1 + 1, t2 - t1 - 1);
    double p = 0.0;
    try {
      p = std::stod(line.substr(t2 + 1));
    } catch (const std::exception&) {
      fail(line_no, "bad probability");
    }
    if (from.empty() || to.empty()) fail(line_no, "empty image token");
    if (rows.count(from) && rows[from].count(to)) fail(line_no, "duplicate row");
    rows[from][to] = p;
  }
  try {
    return from_rows(std::move(rows), smoothing);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
}

BigramModel BigramModel::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

}  // namespace humor
