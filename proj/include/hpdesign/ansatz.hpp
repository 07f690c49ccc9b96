#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hpdesign/qubo.hpp"
#include "hpdesign/statevector.hpp"

namespace hpdesign {

enum class Mixer { X, XYFullyConnected, XYRing };

/// The five studied circuit layouts: (X, UI), (XY-FC, BI), (XY-FC, DI),
/// (XY-ring, BI), (XY-ring, DI).
struct QaoaVariant {
  Mixer mixer = Mixer::X;
  InitKind init = InitKind::UI;
  int row() const;  // 1..5
};

QaoaVariant qaoa_variant_from_row(int row);

struct AnsatzSpec {
  std::string id;       // canonical identifier, e.g. "qaoa-xyfc-di", "hea-1"
  bool hea = false;
  int hea_layers = 1;
  QaoaVariant variant{};
};

/// Parses "qaoa-x-ui" | "qaoa-xyfc-bi" | "qaoa-xyfc-di" | "qaoa-xyring-bi"
/// | "qaoa-xyring-di" | "hea-1" | "hea-2". Throws BadVariant otherwise.
AnsatzSpec parse_ansatz_id(const std::string& id);

std::string ansatz_id_from_row(int row);

struct TemplateGate {
  Gate gate;               // angle holds the fixed value when param < 0
  int param = -1;          // parameter slot
  double multiplier = 1.0; // bound angle = multiplier * params[param]
};

struct ParameterizedCircuit {
  int n = 0;
  std::vector<TemplateGate> gates;
  int param_count = 0;
  std::string variant_id;
  int layers = 0;          // p for QAOA, layer count for HEA
  InitSpec init;           // initial-state preparation baked into the gates
};

/// QAOA circuit: initial-state preparation, then p alternations of the
/// cost layer exp(-i gamma_k C) (exact up to a global phase, RZ/RZZ) and
/// one first-order Trotter step of the mixer. Parameters are ordered
/// (beta_1..beta_p, gamma_1..gamma_p).
ParameterizedCircuit build_qaoa(const QuboModel& m, const QaoaVariant& v,
                                int p);

/// Hardware-efficient SU(2) 2-local circuit: RY+RZ blocks separated by
/// reverse-linear CNOT entanglers; 4n parameters for one layer, 6n for two.
ParameterizedCircuit build_hea(int n, int layers);

Circuit bind(const ParameterizedCircuit& pc, const std::vector<double>& params);

/// Mixer pair list for a given mixer kind (ring order: even pairs, odd
/// pairs, then the wrap-around pair; FC: lexicographic).
std::vector<std::pair<int, int>> mixer_pairs(Mixer mixer, int n);

/// Fixed rewrite into {CNOT + single-qubit rotations} used by depth():
/// RZZ -> CX.RZ.CX; RXXplusYY -> 2-CNOT Givens form; CRY -> 2 CX + 2 RY;
/// CZ -> H.CX.H; barriers vanish.
std::vector<Gate> decompose_for_depth(const Gate& g);

/// Longest path over non-overlapping gate layers after basis rewriting,
/// assuming all-to-all connectivity.
int depth(const Circuit& c);

/// Gate totals by kind after the depth rewrite (reported by the CLI).
std::map<std::string, int> basis_gate_census(const Circuit& c);

/// Validation mode: applies exp(-i beta M) with M = sum_pairs (XX+YY)
/// exactly, via dense eigendecomposition within each Hamming-weight sector
/// carrying amplitude. Intended for cross-checking the Trotterized mixer
/// at small n.
void apply_exact_xy_mixer(Statevector& sv,
                          const std::vector<std::pair<int, int>>& pairs,
                          double beta);

}  // namespace hpdesign
