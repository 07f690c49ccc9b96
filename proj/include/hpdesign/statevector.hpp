#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hpdesign/qubo.hpp"
#include "hpdesign/rng.hpp"

namespace hpdesign {

using cdouble = std::complex<double>;

enum class GateKind {
  RX,
  RY,
  RZ,
  X,
  H,
  CNOT,
  CZ,
  RZZ,
  RXXplusYY,  // exp(-i theta (XX+YY)/2)
  CRY,
  Barrier,    // measurement barrier; no-op in simulation
};

bool gate_is_parameterized(GateKind kind);
int gate_arity(GateKind kind);
std::string gate_name(GateKind kind);

struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;     // second qubit (control for CNOT/CZ/CRY), -1 if unused
  double angle = 0.0;

  static Gate one(GateKind kind, int q, double angle = 0.0) {
    return Gate{kind, q, -1, angle};
  }
  static Gate two(GateKind kind, int a, int b, double angle = 0.0) {
    return Gate{kind, a, b, angle};
  }
};

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;

  void append(const Gate& g) { gates.push_back(g); }
  void append(const Circuit& other);
  std::map<std::string, int> gate_census() const;
};

/// Pure state over n qubits; amplitude index bit i is qubit i.
class Statevector {
 public:
  explicit Statevector(int n);

  int n() const { return n_; }
  uint64_t dim() const { return amplitudes_.size(); }
  const std::vector<cdouble>& amplitudes() const { return amplitudes_; }
  std::vector<cdouble>& amplitudes() { return amplitudes_; }
  double norm() const;

  void apply(const Gate& g);
  void apply_all(const std::vector<Gate>& gates);
  /// Multiplies amplitude k by phases[k]; used for fused diagonal blocks.
  void apply_phases(const std::vector<cdouble>& phases);

  double probability(uint64_t index) const {
    return std::norm(amplitudes_[index]);
  }

 private:
  int n_ = 0;
  std::vector<cdouble> amplitudes_;
};

enum class InitKind { UI, BI, DI };

struct InitSpec {
  InitKind kind = InitKind::UI;
  int n_h = 0;
  static InitSpec ui() { return {InitKind::UI, 0}; }
  static InitSpec bi(int n_h) { return {InitKind::BI, n_h}; }
  static InitSpec di(int n_h) { return {InitKind::DI, n_h}; }
};

/// UI: uniform superposition; BI: |1..10..0> with the first n_h qubits set;
/// DI: Dicke state (uniform over the weight-n_h sector).
Statevector init_state(int n, const InitSpec& spec);

/// Gate-level Dicke preparation (split & cyclic shift construction) mapping
/// |1^{n_h} 0^{n-n_h}> to the Dicke state. O(n_h * n) gates.
Circuit dicke_prep_circuit(int n, int n_h);

Statevector run_circuit(const Circuit& c, const Statevector& s0);

double expectation_diagonal(const Statevector& s, const DiagonalCost& d);

using Counts = std::map<uint64_t, uint64_t>;

Counts sample(const Statevector& s, uint64_t shots, Rng& rng);

/// Single measurement draw from |amp|^2.
uint64_t sample_once(const Statevector& s, Rng& rng);

}  // namespace hpdesign
