#pragma once

#include <cstdint>

#include "hpdesign/statevector.hpp"

namespace hpdesign {

/// Uniform stochastic-Pauli noise: depolarizing probability per one- and
/// two-qubit gate plus independent readout bit flips. Defaults are round
/// numbers near public Heron-class error rates.
struct NoiseModel {
  double p1 = 3e-4;
  double p2 = 3e-3;
  double p_ro = 2e-2;

  bool is_zero() const { return p1 == 0.0 && p2 == 0.0 && p_ro == 0.0; }
};

/// Trajectory sampling: per shot, after each gate a uniform non-identity
/// Pauli is inserted on the touched qubits with probability p1 (one-qubit
/// gates) or p2 (two-qubit gates); one measurement is drawn, then each
/// readout bit flips independently with probability p_ro. Shot s uses an
/// RNG derived from (seed, s), so results do not depend on the thread
/// count.
Counts run_noisy(const Circuit& c, const Statevector& s0,
                 const NoiseModel& nm, uint64_t shots, uint64_t seed);

/// Reusable engine for repeated noisy runs of one circuit. Consecutive
/// diagonal gates are fused into single phase masks (exact while no error
/// lands inside a block) and noiseless prefix states are checkpointed, so
/// each shot only re-simulates from its first error.
class NoisyEngine {
 public:
  NoisyEngine(const Circuit& c, const Statevector& s0);

  Counts run(const NoiseModel& nm, uint64_t shots, uint64_t seed) const;

 private:
  struct Item {
    int first_gate = 0;
    int last_gate = 0;              // inclusive
    std::vector<cdouble> phases;    // fused diagonal block when non-empty
  };

  void simulate_shot(Statevector& scratch, const NoiseModel& nm,
                     Rng& rng, uint64_t* outcome) const;

  const Circuit circuit_;
  std::vector<Item> items_;
  std::vector<int> item_of_gate_;
  std::vector<uint8_t> gate_class_;       // 0 none, 1 one-qubit, 2 two-qubit
  std::vector<Statevector> checkpoints_;  // state before item k*stride
  int checkpoint_stride_ = 1;
  Statevector final_state_;
  std::vector<double> final_cdf_;
};

}  // namespace hpdesign
