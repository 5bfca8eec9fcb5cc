#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "humor/events.hpp"
#include "humor/types.hpp"

namespace humor {

// Hopfield-style network of Ising spins with symmetric couplings stored on
// unordered pairs, a uniform external field and a temperature. Single-owner
// mutable; all randomness derives from the seed.
struct SpinNetwork {
  std::vector<int> sigma;  // +1 excited, -1 rest
  std::map<std::pair<int, int>, double> couplings;  // keys (i, j) with i < j
  double field = 0.0;      // H > 0 makes spin-up energetically unfavorable
  double temperature = 0.0;
  std::mt19937_64 rng{0};

  static SpinNetwork make(int spin_count, std::uint64_t seed);

  int size() const { return static_cast<int>(sigma.size()); }
  void set_coupling(int i, int j, double value);
  double coupling(int i, int j) const;
  // sum_j J_ij sigma_j + H
  double local_field(int i) const;
  bool all_down() const;
};

// E = sum_{i<j} J_ij sigma_i sigma_j + H * sum_i sigma_i
double energy(const SpinNetwork& net);

// One relaxation sweep: visits all spins in seeded random order; a flip is
// accepted with probability 1/(1+exp(dE/T)) for T > 0, or iff dE < 0 at T = 0
// (ties rejected). Returns the total accepted energy change.
double glauber_sweep(SpinNetwork& net);

struct NullifyReport {
  int sweeps_used = 0;
  double energy_to_reservoir = 0.0;
  bool final_all_down = false;
  double motor_share = 0.0;   // laughter amplitude
  double limbic_share = 0.0;  // energy forced out to other regions
};

// Applies a strong field and quenches at T = 0 until every spin is down or
// max_sweeps is exhausted; the released energy is split between the motor
// channel (routing_rho) and the rest.
NullifyReport nullify(SpinNetwork& net, double field_strength, int max_sweeps,
                      double routing_rho);

struct LaughterParams {
  int spins_per_image = 4;
  double coupling_scale = 0.05;
  double routing_rho = 1.0;
  double field_strength = 1.0;
  int max_sweeps = 100;
};

// Writes the retracted fragment as an all-up region of k * spins_per_image
// spins with seed-derived couplings, then nullifies it. The motor share is
// the laughter amplitude.
NullifyReport laughter_from_retraction(const HumorEvent& event,
                                       const LaughterParams& params,
                                       std::uint64_t seed);
NullifyReport laughter_from_retraction(std::size_t retracted_length,
                                       const LaughterParams& params,
                                       std::uint64_t seed);

// Nervous laughter: forced deletion of unpleasant content of the given
// length; identical dynamics, tagged `nervous` in traces.
NullifyReport forced_deletion(std::size_t content_length,
                              const LaughterParams& params, std::uint64_t seed);

}  // namespace humor
