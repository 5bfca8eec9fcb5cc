#include "humor/laughter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace humor {

SpinNetwork SpinNetwork::make(int spin_count, std::uint64_t seed) {
  if (spin_count < 1) throw std::invalid_argument("spin count must be positive");
  SpinNetwork net;
  net.sigma.assign(spin_count, 1);
  net.rng.seed(seed);
  return net;
}

void SpinNetwork::set_coupling(int i, int j, double value) {
  if (i == j) throw std::invalid_argument("no self-couplings");
  if (i < 0 || j < 0 || i >= size() || j >= size())
    throw std::invalid_argument("spin index out of range");
  couplings[{std::min(i, j), std::max(i, j)}] = value;
}

double SpinNetwork::coupling(int i, int j) const {
  auto it = couplings.find({std::min(i, j), std::max(i, j)});
  return it == couplings.end() ? 0.0 : it->second;
}

double SpinNetwork::local_field(int i) const {
  double h = field;
  for (const auto& [pair, j_value] : couplings) {
    if (pair.first == i) h += j_value * sigma[pair.second];
    else if (pair.second == i) h += j_value * sigma[pair.first];
  }
  return h;
}

bool SpinNetwork::all_down() const {
  return std::all_of(sigma.begin(), sigma.end(), [](int s) { return s == -1; });
}

double energy(const SpinNetwork& net) {
  double e = 0.0;
  for (const auto& [pair, j_value] : net.couplings)
    e += j_value * net.sigma[pair.first] * net.sigma[pair.second];
  for (int s : net.sigma) e += net.field * s;
  return e;
}

double glauber_sweep(SpinNetwork& net) {
  std::vector<int> order(net.sigma.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), net.rng);

  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double total = 0.0;
  for (int i : order) {
    const double delta = -2.0 * net.sigma[i] * net.local_field(i);
    bool accept = false;
    if (net.temperature > 0.0) {
      const double x = delta / net.temperature;
      const double p = x > 700.0 ? 0.0 : 1.0 / (1.0 + std::exp(x));
      accept = uniform(net.rng) < p;
    } else {
      accept = delta < 0.0;
    }
    if (accept) {
      net.sigma[i] = -net.sigma[i];
      total += delta;
    }
  }
  return total;
}

NullifyReport nullify(SpinNetwork& net, double field_strength, int max_sweeps,
                      double routing_rho) {
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
  if (routing_rho < 0.0 || routing_rho > 1.0)
    throw std::invalid_argument("routing_rho must be in [0, 1]");
  net.field = field_strength;
  net.temperature = 0.0;

  NullifyReport report;
  double total = 0.0;
  while (!net.all_down() && report.sweeps_used < max_sweeps) {
    total += glauber_sweep(net);
    ++report.sweeps_used;
  }
  report.final_all_down = net.all_down();
  report.energy_to_reservoir = -total;
  report.motor_share = routing_rho * report.energy_to_reservoir;
  report.limbic_share = report.energy_to_reservoir - report.motor_share;
  return report;
}

NullifyReport laughter_from_retraction(std::size_t retracted_length,
                                       const LaughterParams& params,
                                       std::uint64_t seed) {
  if (retracted_length < 1)
    throw std::invalid_argument("retracted fragment must be nonempty");
  if (params.spins_per_image < 1)
    throw std::invalid_argument("spins_per_image must be positive");

  const int n = static_cast<int>(retracted_length) * params.spins_per_image;
  SpinNetwork net = SpinNetwork::make(n, mix_seed(seed, 1));
  if (params.coupling_scale != 0.0) {
    std::mt19937_64 coupling_rng(mix_seed(seed, 2));
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        net.set_coupling(i, j, params.coupling_scale * uniform(coupling_rng));
  }
  return nullify(net, params.field_strength, params.max_sweeps, params.routing_rho);
}

NullifyReport laughter_from_retraction(const HumorEvent& event,
                                       const LaughterParams& params,
                                       std::uint64_t seed) {
  return laughter_from_retraction(event.old_images.size(), params, seed);
}

NullifyReport forced_deletion(std::size_t content_length,
                              const LaughterParams& params, std::uint64_t seed) {
  if (content_length < 1)
    throw std::invalid_argument("content length must be positive");
  return laughter_from_retraction(content_length, params, seed);
}

}  // namespace humor
