#include "hpdesign/noise.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "hpdesign/errors.hpp"
#include "hpdesign/threads.hpp"

namespace hpdesign {

namespace {

constexpr int kFuseMin = 4;        // shortest diagonal run worth fusing
constexpr uint64_t kCheckpointBudget = 256ull << 20;  // bytes

bool is_diagonal(GateKind kind) {
  return kind == GateKind::RZ || kind == GateKind::RZZ ||
         kind == GateKind::CZ || kind == GateKind::Barrier;
}

// 0 = noise-free (barrier), 1 = one-qubit, 2 = two-qubit.
uint8_t noise_class(GateKind kind) {
  if (kind == GateKind::Barrier) return 0;
  return gate_arity(kind) == 1 ? 1 : 2;
}

void fold_diagonal(std::vector<cdouble>& phases, const Gate& g) {
  const uint64_t dim = phases.size();
  switch (g.kind) {
    case GateKind::Barrier:
      return;
    case GateKind::RZ: {
      const uint64_t bit = uint64_t{1} << g.q0;
      const cdouble p0 = std::polar(1.0, -g.angle / 2);
      const cdouble p1 = std::polar(1.0, g.angle / 2);
      for (uint64_t k = 0; k < dim; ++k) phases[k] *= (k & bit) ? p1 : p0;
      return;
    }
    case GateKind::RZZ: {
      const uint64_t b0 = uint64_t{1} << g.q0;
      const uint64_t b1 = uint64_t{1} << g.q1;
      const cdouble same = std::polar(1.0, -g.angle / 2);
      const cdouble diff = std::polar(1.0, g.angle / 2);
      for (uint64_t k = 0; k < dim; ++k)
        phases[k] *= (static_cast<bool>(k & b0) == static_cast<bool>(k & b1))
                         ? same
                         : diff;
      return;
    }
    case GateKind::CZ: {
      const uint64_t mask = (uint64_t{1} << g.q0) | (uint64_t{1} << g.q1);
      for (uint64_t k = 0; k < dim; ++k)
        if ((k & mask) == mask) phases[k] = -phases[k];
      return;
    }
    default:
      fail(ErrorCode::DimensionMismatch, "gate is not diagonal");
  }
}

// p in {1, 2, 3} = X, Y, Z.
void apply_pauli(Statevector& sv, int q, int p) {
  auto& amp = sv.amplitudes();
  const uint64_t dim = amp.size();
  const uint64_t bit = uint64_t{1} << q;
  switch (p) {
    case 1:
      for (uint64_t k = 0; k < dim; ++k)
        if (!(k & bit)) std::swap(amp[k], amp[k | bit]);
      return;
    case 2:
      for (uint64_t k = 0; k < dim; ++k) {
        if (k & bit) continue;
        cdouble a = amp[k], b = amp[k | bit];
        amp[k] = cdouble{0, -1} * b;
        amp[k | bit] = cdouble{0, 1} * a;
      }
      return;
    case 3:
      for (uint64_t k = 0; k < dim; ++k)
        if (k & bit) amp[k] = -amp[k];
      return;
    default:
      return;
  }
}

struct ErrorEvent {
  int gate = 0;
  int pauli = 0;  // 1..3 for one-qubit gates, 1..15 for two-qubit gates
};

}  // namespace

NoisyEngine::NoisyEngine(const Circuit& c, const Statevector& s0)
    : circuit_(c), final_state_(s0) {
  require(c.n == s0.n(), ErrorCode::DimensionMismatch,
          "circuit and state have different qubit counts");
  const int num_gates = static_cast<int>(c.gates.size());
  gate_class_.resize(num_gates);
  item_of_gate_.resize(num_gates);
  for (int g = 0; g < num_gates; ++g)
    gate_class_[g] = noise_class(c.gates[g].kind);

  // Items: maximal diagonal runs (fused) or single gates.
  int g = 0;
  while (g < num_gates) {
    int end = g;
    while (end < num_gates && is_diagonal(c.gates[end].kind)) ++end;
    if (end - g >= kFuseMin) {
      Item item;
      item.first_gate = g;
      item.last_gate = end - 1;
      item.phases.assign(s0.dim(), cdouble{1.0, 0.0});
      for (int k = g; k < end; ++k) fold_diagonal(item.phases, c.gates[k]);
      items_.push_back(std::move(item));
      g = end;
    } else {
      items_.push_back(Item{g, g, {}});
      ++g;
    }
  }
  for (size_t i = 0; i < items_.size(); ++i)
    for (int k = items_[i].first_gate; k <= items_[i].last_gate; ++k)
      item_of_gate_[k] = static_cast<int>(i);

  const uint64_t state_bytes = s0.dim() * sizeof(cdouble);
  const uint64_t max_checkpoints =
      std::max<uint64_t>(1, kCheckpointBudget / std::max<uint64_t>(1, state_bytes));
  checkpoint_stride_ = static_cast<int>(std::max<uint64_t>(
      1, (items_.size() + max_checkpoints - 1) / max_checkpoints));

  Statevector state = s0;
  for (size_t i = 0; i < items_.size(); ++i) {
    if (i % checkpoint_stride_ == 0) checkpoints_.push_back(state);
    const Item& item = items_[i];
    if (!item.phases.empty()) {
      state.apply_phases(item.phases);
    } else {
      for (int k = item.first_gate; k <= item.last_gate; ++k)
        state.apply(circuit_.gates[k]);
    }
  }
  final_state_ = state;
  final_cdf_.resize(state.dim());
  double acc = 0.0;
  for (uint64_t k = 0; k < state.dim(); ++k) {
    acc += state.probability(k);
    final_cdf_[k] = acc;
  }
}

void NoisyEngine::simulate_shot(Statevector& scratch, const NoiseModel& nm,
                                Rng& rng, uint64_t* outcome) const {
  thread_local std::vector<ErrorEvent> errors;
  errors.clear();
  for (int g = 0; g < static_cast<int>(circuit_.gates.size()); ++g) {
    const uint8_t cls = gate_class_[g];
    const double p = cls == 1 ? nm.p1 : cls == 2 ? nm.p2 : 0.0;
    if (p <= 0.0) continue;
    if (rng.next_double() < p) {
      const int pauli =
          cls == 1 ? 1 + static_cast<int>(rng.next_below(3))
                   : 1 + static_cast<int>(rng.next_below(15));
      errors.push_back(ErrorEvent{g, pauli});
    }
  }

  if (errors.empty()) {
    // Noiseless trajectory; draw directly from the cached distribution.
    double u = rng.next_double() * final_cdf_.back();
    auto it = std::upper_bound(final_cdf_.begin(), final_cdf_.end(), u);
    *outcome = it == final_cdf_.end()
                   ? final_cdf_.size() - 1
                   : static_cast<uint64_t>(it - final_cdf_.begin());
    return;
  }

  const int first_item = item_of_gate_[errors[0].gate];
  const int ck = first_item / checkpoint_stride_;
  scratch = checkpoints_[ck];
  size_t next_error = 0;
  for (size_t i = ck * checkpoint_stride_; i < items_.size(); ++i) {
    const Item& item = items_[i];
    const bool error_inside =
        next_error < errors.size() &&
        errors[next_error].gate <= item.last_gate;
    if (!error_inside && !item.phases.empty()) {
      scratch.apply_phases(item.phases);
      continue;
    }
    if (!error_inside && static_cast<int>(i) < first_item) {
      for (int k = item.first_gate; k <= item.last_gate; ++k)
        scratch.apply(circuit_.gates[k]);
      continue;
    }
    for (int k = item.first_gate; k <= item.last_gate; ++k) {
      scratch.apply(circuit_.gates[k]);
      if (next_error < errors.size() && errors[next_error].gate == k) {
        const Gate& gate = circuit_.gates[k];
        const int pauli = errors[next_error].pauli;
        if (gate_arity(gate.kind) == 1) {
          apply_pauli(scratch, gate.q0, pauli);
        } else {
          if (pauli & 3) apply_pauli(scratch, gate.q0, pauli & 3);
          if (pauli >> 2) apply_pauli(scratch, gate.q1, pauli >> 2);
        }
        ++next_error;
      }
    }
  }
  *outcome = sample_once(scratch, rng);
}

Counts NoisyEngine::run(const NoiseModel& nm, uint64_t shots,
                        uint64_t seed) const {
  require(nm.p1 >= 0 && nm.p1 <= 1 && nm.p2 >= 0 && nm.p2 <= 1 &&
              nm.p_ro >= 0 && nm.p_ro <= 1,
          ErrorCode::BadConfig, "noise probabilities must lie in [0, 1]");
  require(shots >= 1, ErrorCode::BadConfig, "need shots >= 1");

  Counts counts;
  std::mutex merge_mutex;
  const int n = circuit_.n;
  parallel_chunks(0, shots, [&](std::size_t lo, std::size_t hi) {
    Counts local;
    Statevector scratch(n);
    for (std::size_t shot = lo; shot < hi; ++shot) {
      Rng rng(derive_seed(seed, shot));
      uint64_t outcome = 0;
      simulate_shot(scratch, nm, rng, &outcome);
      if (nm.p_ro > 0.0) {
        for (int q = 0; q < n; ++q)
          if (rng.next_double() < nm.p_ro) outcome ^= uint64_t{1} << q;
      }
      local[outcome]++;
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (auto [k, v] : local) counts[k] += v;
  });
  return counts;
}

Counts run_noisy(const Circuit& c, const Statevector& s0, const NoiseModel& nm,
                 uint64_t shots, uint64_t seed) {
  return NoisyEngine(c, s0).run(nm, shots, seed);
}

}  // namespace hpdesign
