#include "hpdesign/statevector.hpp"

#include <algorithm>
#include <cmath>

#include "hpdesign/errors.hpp"

namespace hpdesign {

bool gate_is_parameterized(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::RZZ:
    case GateKind::RXXplusYY:
    case GateKind::CRY:
      return true;
    default:
      return false;
  }
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::X:
    case GateKind::H:
      return 1;
    case GateKind::Barrier:
      return 0;
    default:
      return 2;
  }
}

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::CNOT: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::RZZ: return "rzz";
    case GateKind::RXXplusYY: return "rxx_plus_yy";
    case GateKind::CRY: return "cry";
    case GateKind::Barrier: return "barrier";
  }
  return "?";
}

void Circuit::append(const Circuit& other) {
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

std::map<std::string, int> Circuit::gate_census() const {
  std::map<std::string, int> census;
  for (const auto& g : gates) census[gate_name(g.kind)]++;
  return census;
}

Statevector::Statevector(int n) : n_(n) {
  require(n >= 1 && n <= kMaxChainLength, ErrorCode::DimensionMismatch,
          "qubit count must lie in [1, " + std::to_string(kMaxChainLength) +
              "]");
  amplitudes_.assign(uint64_t{1} << n, cdouble{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

namespace {

void check_gate(const Gate& g, int n) {
  const int arity = gate_arity(g.kind);
  if (arity >= 1)
    require(g.q0 >= 0 && g.q0 < n, ErrorCode::DimensionMismatch,
            "gate qubit out of range");
  if (arity == 2)
    require(g.q1 >= 0 && g.q1 < n && g.q1 != g.q0,
            ErrorCode::DimensionMismatch, "gate qubits must be distinct");
}

}  // namespace

void Statevector::apply(const Gate& g) {
  check_gate(g, n_);
  auto& amp = amplitudes_;
  const uint64_t dim = amp.size();
  switch (g.kind) {
    case GateKind::Barrier:
      return;
    case GateKind::X: {
      const uint64_t bit = uint64_t{1} << g.q0;
      for (uint64_t k = 0; k < dim; ++k)
        if (!(k & bit)) std::swap(amp[k], amp[k | bit]);
      return;
    }
    case GateKind::H: {
      const uint64_t bit = uint64_t{1} << g.q0;
      const double inv = 1.0 / std::sqrt(2.0);
      for (uint64_t k = 0; k < dim; ++k) {
        if (k & bit) continue;
        cdouble a = amp[k], b = amp[k | bit];
        amp[k] = inv * (a + b);
        amp[k | bit] = inv * (a - b);
      }
      return;
    }
    case GateKind::RX:
    case GateKind::RY: {
      const uint64_t bit = uint64_t{1} << g.q0;
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      // RX: [[c, -is], [-is, c]]; RY: [[c, -s], [s, c]]
      const cdouble u01 = g.kind == GateKind::RX ? cdouble{0, -s} : cdouble{-s, 0};
      const cdouble u10 = g.kind == GateKind::RX ? cdouble{0, -s} : cdouble{s, 0};
      for (uint64_t k = 0; k < dim; ++k) {
        if (k & bit) continue;
        cdouble a = amp[k], b = amp[k | bit];
        amp[k] = c * a + u01 * b;
        amp[k | bit] = u10 * a + c * b;
      }
      return;
    }
    case GateKind::RZ: {
      const uint64_t bit = uint64_t{1} << g.q0;
      const cdouble p0 = std::polar(1.0, -g.angle / 2);
      const cdouble p1 = std::polar(1.0, g.angle / 2);
      for (uint64_t k = 0; k < dim; ++k) amp[k] *= (k & bit) ? p1 : p0;
      return;
    }
    case GateKind::CNOT: {
      // q1 is the control, q0 the target.
      const uint64_t ctrl = uint64_t{1} << g.q1;
      const uint64_t tgt = uint64_t{1} << g.q0;
      for (uint64_t k = 0; k < dim; ++k)
        if ((k & ctrl) && !(k & tgt)) std::swap(amp[k], amp[k | tgt]);
      return;
    }
    case GateKind::CZ: {
      const uint64_t mask = (uint64_t{1} << g.q0) | (uint64_t{1} << g.q1);
      for (uint64_t k = 0; k < dim; ++k)
        if ((k & mask) == mask) amp[k] = -amp[k];
      return;
    }
    case GateKind::RZZ: {
      const uint64_t b0 = uint64_t{1} << g.q0;
      const uint64_t b1 = uint64_t{1} << g.q1;
      const cdouble same = std::polar(1.0, -g.angle / 2);
      const cdouble diff = std::polar(1.0, g.angle / 2);
      for (uint64_t k = 0; k < dim; ++k)
        amp[k] *= (static_cast<bool>(k & b0) == static_cast<bool>(k & b1))
                      ? same
                      : diff;
      return;
    }
    case GateKind::RXXplusYY: {
      // Rotation in the {|01>, |10>} block: [[cos, -i sin], [-i sin, cos]].
      const uint64_t b0 = uint64_t{1} << g.q0;
      const uint64_t b1 = uint64_t{1} << g.q1;
      const double c = std::cos(g.angle);
      const cdouble is{0.0, std::sin(g.angle)};
      for (uint64_t k = 0; k < dim; ++k) {
        if ((k & b0) || !(k & b1)) continue;  // enumerate q0=0, q1=1
        const uint64_t k01 = k;               // q0=0, q1=1
        const uint64_t k10 = (k ^ b1) | b0;   // q0=1, q1=0
        cdouble a = amp[k01], b = amp[k10];
        amp[k01] = c * a - is * b;
        amp[k10] = -is * a + c * b;
      }
      return;
    }
    case GateKind::CRY: {
      // q1 is the control, q0 the target.
      const uint64_t ctrl = uint64_t{1} << g.q1;
      const uint64_t tgt = uint64_t{1} << g.q0;
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      for (uint64_t k = 0; k < dim; ++k) {
        if (!(k & ctrl) || (k & tgt)) continue;
        cdouble a = amp[k], b = amp[k | tgt];
        amp[k] = c * a - s * b;
        amp[k | tgt] = s * a + c * b;
      }
      return;
    }
  }
}

void Statevector::apply_all(const std::vector<Gate>& gates) {
  for (const auto& g : gates) apply(g);
}

void Statevector::apply_phases(const std::vector<cdouble>& phases) {
  require(phases.size() == amplitudes_.size(), ErrorCode::DimensionMismatch,
          "phase vector dimension mismatch");
  for (uint64_t k = 0; k < amplitudes_.size(); ++k)
    amplitudes_[k] *= phases[k];
}

Statevector init_state(int n, const InitSpec& spec) {
  Statevector sv(n);
  switch (spec.kind) {
    case InitKind::UI: {
      const double a = 1.0 / std::sqrt(static_cast<double>(sv.dim()));
      std::fill(sv.amplitudes().begin(), sv.amplitudes().end(), cdouble{a, 0});
      return sv;
    }
    case InitKind::BI: {
      require(spec.n_h >= 0 && spec.n_h <= n, ErrorCode::BadComposition,
              "n_h must lie in [0, n]");
      sv.amplitudes()[0] = 0.0;
      sv.amplitudes()[(uint64_t{1} << spec.n_h) - 1] = 1.0;
      return sv;
    }
    case InitKind::DI: {
      require(spec.n_h >= 0 && spec.n_h <= n, ErrorCode::BadComposition,
              "n_h must lie in [0, n]");
      uint64_t count = 0;
      for (uint64_t k = 0; k < sv.dim(); ++k)
        if (__builtin_popcountll(k) == spec.n_h) ++count;
      const double a = 1.0 / std::sqrt(static_cast<double>(count));
      sv.amplitudes()[0] = 0.0;
      for (uint64_t k = 0; k < sv.dim(); ++k)
        if (__builtin_popcountll(k) == spec.n_h) sv.amplitudes()[k] = a;
      return sv;
    }
  }
  fail(ErrorCode::BadComposition, "unknown init kind");
}

Circuit dicke_prep_circuit(int n, int n_h) {
  require(n_h > 0 && n_h < n, ErrorCode::BadComposition,
          "Dicke preparation needs 0 < n_h < n");
  Circuit c;
  c.n = n;

  // Givens rotation on (a, b): |10> -> cos t |10> + sin t |01>.
  auto givens = [&](int a, int b, double t) {
    c.append(Gate::two(GateKind::CNOT, b, a));       // control a, target b
    c.append(Gate::two(GateKind::CRY, a, b, -2 * t));  // control b, target a
    c.append(Gate::two(GateKind::CNOT, b, a));
  };
  // Same rotation applied only when qubit `ctrl` is 0. The doubly
  // controlled RY is expanded into CRY/CNOT on the fly.
  auto givens_if_zero = [&](int a, int b, int ctrl, double t) {
    const double theta = -2 * t;
    c.append(Gate::one(GateKind::X, ctrl));
    c.append(Gate::two(GateKind::CNOT, b, a));
    // ccry(theta; controls {b, ctrl} -> a)
    c.append(Gate::two(GateKind::CRY, a, b, theta / 2));
    c.append(Gate::two(GateKind::CNOT, b, ctrl));
    c.append(Gate::two(GateKind::CRY, a, b, -theta / 2));
    c.append(Gate::two(GateKind::CNOT, b, ctrl));
    c.append(Gate::two(GateKind::CRY, a, ctrl, theta / 2));
    c.append(Gate::two(GateKind::CNOT, b, a));
    c.append(Gate::one(GateKind::X, ctrl));
  };

  // Split & cyclic shift block on qubits [0, m): for every weight l <= cap,
  // move the trailing 1 of |1^l 0^(m-l)> to position m-1 with amplitude
  // sqrt(l/m).
  for (int m = n; m >= 2; --m) {
    const int cap = std::min(n_h, m - 1);
    for (int j = cap; j >= 1; --j) {
      const double t = std::asin(std::sqrt(static_cast<double>(j) / m));
      if (j == cap)
        givens(j - 1, m - 1, t);
      else
        givens_if_zero(j - 1, m - 1, j, t);
    }
  }
  return c;
}

Statevector run_circuit(const Circuit& c, const Statevector& s0) {
  require(c.n == s0.n(), ErrorCode::DimensionMismatch,
          "circuit and state have different qubit counts");
  Statevector sv = s0;
  sv.apply_all(c.gates);
  return sv;
}

double expectation_diagonal(const Statevector& s, const DiagonalCost& d) {
  require(s.n() == d.n(), ErrorCode::DimensionMismatch,
          "state and cost have different qubit counts");
  double e = 0.0;
  for (uint64_t k = 0; k < s.dim(); ++k) {
    double p = s.probability(k);
    if (p > 0.0) e += p * d(k);
  }
  return e;
}

uint64_t sample_once(const Statevector& s, Rng& rng) {
  double u = rng.next_double();
  double acc = 0.0;
  const auto& amp = s.amplitudes();
  for (uint64_t k = 0; k + 1 < amp.size(); ++k) {
    acc += std::norm(amp[k]);
    if (u < acc) return k;
  }
  return amp.size() - 1;
}

Counts sample(const Statevector& s, uint64_t shots, Rng& rng) {
  require(shots >= 1, ErrorCode::BadConfig, "need shots >= 1");
  // Cumulative distribution + binary search keeps this O(shots log dim).
  std::vector<double> cdf(s.dim());
  double acc = 0.0;
  for (uint64_t k = 0; k < s.dim(); ++k) {
    acc += s.probability(k);
    cdf[k] = acc;
  }
  Counts counts;
  for (uint64_t shot = 0; shot < shots; ++shot) {
    double u = rng.next_double() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    uint64_t k = it == cdf.end() ? s.dim() - 1
                                 : static_cast<uint64_t>(it - cdf.begin());
    counts[k]++;
  }
  return counts;
}

}  // namespace hpdesign
