#include "hpdesign/ansatz.hpp"

#include <algorithm>
#include <cmath>

#include "hpdesign/errors.hpp"

namespace hpdesign {

namespace {

constexpr double kPi = 3.14159265358979323846;

void append_init_prep(ParameterizedCircuit& pc, const InitSpec& init) {
  switch (init.kind) {
    case InitKind::UI:
      for (int q = 0; q < pc.n; ++q)
        pc.gates.push_back({Gate::one(GateKind::H, q), -1, 1.0});
      return;
    case InitKind::BI:
      for (int q = 0; q < init.n_h; ++q)
        pc.gates.push_back({Gate::one(GateKind::X, q), -1, 1.0});
      return;
    case InitKind::DI: {
      for (int q = 0; q < init.n_h; ++q)
        pc.gates.push_back({Gate::one(GateKind::X, q), -1, 1.0});
      Circuit prep = dicke_prep_circuit(pc.n, init.n_h);
      for (const auto& g : prep.gates) pc.gates.push_back({g, -1, 1.0});
      return;
    }
  }
}

}  // namespace

int QaoaVariant::row() const {
  if (mixer == Mixer::X && init == InitKind::UI) return 1;
  if (mixer == Mixer::XYFullyConnected && init == InitKind::BI) return 2;
  if (mixer == Mixer::XYFullyConnected && init == InitKind::DI) return 3;
  if (mixer == Mixer::XYRing && init == InitKind::BI) return 4;
  if (mixer == Mixer::XYRing && init == InitKind::DI) return 5;
  fail(ErrorCode::BadVariant, "mixer/init combination is not a studied row");
}

QaoaVariant qaoa_variant_from_row(int row) {
  switch (row) {
    case 1: return {Mixer::X, InitKind::UI};
    case 2: return {Mixer::XYFullyConnected, InitKind::BI};
    case 3: return {Mixer::XYFullyConnected, InitKind::DI};
    case 4: return {Mixer::XYRing, InitKind::BI};
    case 5: return {Mixer::XYRing, InitKind::DI};
    default:
      fail(ErrorCode::BadVariant, "variant row must lie in 1..5");
  }
}

std::string ansatz_id_from_row(int row) {
  switch (row) {
    case 1: return "qaoa-x-ui";
    case 2: return "qaoa-xyfc-bi";
    case 3: return "qaoa-xyfc-di";
    case 4: return "qaoa-xyring-bi";
    case 5: return "qaoa-xyring-di";
    default: fail(ErrorCode::BadVariant, "variant row must lie in 1..5");
  }
}

AnsatzSpec parse_ansatz_id(const std::string& id) {
  AnsatzSpec spec;
  spec.id = id;
  if (id == "hea-1" || id == "hea-2") {
    spec.hea = true;
    spec.hea_layers = id == "hea-1" ? 1 : 2;
    return spec;
  }
  if (id == "qaoa-x-ui") spec.variant = qaoa_variant_from_row(1);
  else if (id == "qaoa-xyfc-bi") spec.variant = qaoa_variant_from_row(2);
  else if (id == "qaoa-xyfc-di") spec.variant = qaoa_variant_from_row(3);
  else if (id == "qaoa-xyring-bi") spec.variant = qaoa_variant_from_row(4);
  else if (id == "qaoa-xyring-di") spec.variant = qaoa_variant_from_row(5);
  else fail(ErrorCode::BadVariant, "unknown variant id: " + id);
  return spec;
}

std::vector<std::pair<int, int>> mixer_pairs(Mixer mixer, int n) {
  std::vector<std::pair<int, int>> pairs;
  switch (mixer) {
    case Mixer::X:
      return pairs;
    case Mixer::XYRing:
      for (int i = 0; i + 1 < n; i += 2) pairs.emplace_back(i, i + 1);
      for (int i = 1; i + 1 < n; i += 2) pairs.emplace_back(i, i + 1);
      if (n > 2) pairs.emplace_back(n - 1, 0);
      return pairs;
    case Mixer::XYFullyConnected:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      return pairs;
  }
  return pairs;
}

ParameterizedCircuit build_qaoa(const QuboModel& m, const QaoaVariant& v,
                                int p) {
  require(p >= 1, ErrorCode::BadLayers, "need p >= 1");
  const int row = v.row();  // validates the combination
  ParameterizedCircuit pc;
  pc.n = m.n;
  pc.layers = p;
  pc.param_count = 2 * p;
  pc.variant_id = ansatz_id_from_row(row);
  pc.init = v.init == InitKind::UI ? InitSpec::ui()
            : v.init == InitKind::BI ? InitSpec::bi(m.n_h)
                                     : InitSpec::di(m.n_h);
  append_init_prep(pc, pc.init);

  // Ising form of the cost: C = const + sum h_i Z_i + sum J_ij Z_i Z_j with
  // h_i = -(a_i/2 + sum_j b_ij/4), J_ij = b_ij/4 (a: linear, b: quadratic).
  std::vector<double> h(m.n, 0.0);
  for (int i = 0; i < m.n; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < m.n; ++j) {
      if (j > i) row_sum += m.quadratic[i][j];
      if (j < i) row_sum += m.quadratic[j][i];
    }
    h[i] = -(m.linear[i] / 2.0 + row_sum / 4.0);
  }

  const auto pairs = mixer_pairs(v.mixer, m.n);
  for (int layer = 0; layer < p; ++layer) {
    const int beta_slot = layer;
    const int gamma_slot = p + layer;
    // Cost layer: exp(-i gamma C) up to a global phase.
    for (int q = 0; q < m.n; ++q)
      pc.gates.push_back(
          {Gate::one(GateKind::RZ, q), gamma_slot, 2.0 * h[q]});
    for (int i = 0; i < m.n; ++i)
      for (int j = i + 1; j < m.n; ++j)
        if (m.quadratic[i][j] != 0.0)
          pc.gates.push_back({Gate::two(GateKind::RZZ, i, j), gamma_slot,
                              m.quadratic[i][j] / 2.0});
    // Mixer layer.
    if (v.mixer == Mixer::X) {
      for (int q = 0; q < m.n; ++q)
        pc.gates.push_back({Gate::one(GateKind::RX, q), beta_slot, 2.0});
    } else {
      for (auto [i, j] : pairs)
        pc.gates.push_back(
            {Gate::two(GateKind::RXXplusYY, i, j), beta_slot, 2.0});
    }
  }
  return pc;
}

ParameterizedCircuit build_hea(int n, int layers) {
  require(n >= 2, ErrorCode::BadVariant, "HEA needs n >= 2");
  require(layers == 1 || layers == 2, ErrorCode::BadLayers,
          "HEA supports 1 or 2 layers");
  ParameterizedCircuit pc;
  pc.n = n;
  pc.layers = layers;
  pc.param_count = 2 * n * (layers + 1);
  pc.variant_id = "hea-" + std::to_string(layers);
  pc.init = InitSpec::bi(0);  // HEA starts from |0...0>

  auto rotation_block = [&](int block) {
    for (int q = 0; q < n; ++q) {
      pc.gates.push_back(
          {Gate::one(GateKind::RY, q), 2 * n * block + 2 * q, 1.0});
      pc.gates.push_back(
          {Gate::one(GateKind::RZ, q), 2 * n * block + 2 * q + 1, 1.0});
    }
  };
  auto entangler = [&] {
    for (int i = n - 2; i >= 0; --i)
      pc.gates.push_back({Gate::two(GateKind::CNOT, i + 1, i), -1, 1.0});
  };

  rotation_block(0);
  for (int layer = 0; layer < layers; ++layer) {
    entangler();
    rotation_block(layer + 1);
  }
  pc.gates.push_back({Gate::one(GateKind::Barrier, 0), -1, 1.0});
  return pc;
}

Circuit bind(const ParameterizedCircuit& pc,
             const std::vector<double>& params) {
  require(static_cast<int>(params.size()) == pc.param_count,
          ErrorCode::ArityMismatch,
          "expected " + std::to_string(pc.param_count) + " parameters, got " +
              std::to_string(params.size()));
  Circuit c;
  c.n = pc.n;
  c.gates.reserve(pc.gates.size());
  for (const auto& tg : pc.gates) {
    Gate g = tg.gate;
    if (tg.param >= 0) g.angle = tg.multiplier * params[tg.param];
    c.gates.push_back(g);
  }
  return c;
}

std::vector<Gate> decompose_for_depth(const Gate& g) {
  switch (g.kind) {
    case GateKind::Barrier:
      return {};
    case GateKind::RZZ: {
      // CX(a->b) . RZ(theta) b . CX(a->b)
      const int a = g.q0, b = g.q1;
      return {Gate::two(GateKind::CNOT, b, a), Gate::one(GateKind::RZ, b, g.angle),
              Gate::two(GateKind::CNOT, b, a)};
    }
    case GateKind::CRY: {
      // RY(t/2) . CX . RY(-t/2) . CX on the target
      const int t = g.q0, c = g.q1;
      return {Gate::one(GateKind::RY, t, g.angle / 2),
              Gate::two(GateKind::CNOT, t, c),
              Gate::one(GateKind::RY, t, -g.angle / 2),
              Gate::two(GateKind::CNOT, t, c)};
    }
    case GateKind::CZ: {
      const int t = g.q0, c = g.q1;
      return {Gate::one(GateKind::H, t), Gate::two(GateKind::CNOT, t, c),
              Gate::one(GateKind::H, t)};
    }
    case GateKind::RXXplusYY: {
      // Two-CNOT Givens form (verified against the primitive in tests).
      const int a = g.q0, b = g.q1;
      const double th = g.angle;
      return {
          Gate::one(GateKind::RZ, b, -kPi / 2), Gate::one(GateKind::RX, b, kPi / 2),
          Gate::one(GateKind::RZ, b, kPi / 2),  Gate::one(GateKind::RZ, a, kPi / 2),
          Gate::two(GateKind::CNOT, a, b),      Gate::one(GateKind::RY, b, -th),
          Gate::one(GateKind::RY, a, -th),      Gate::two(GateKind::CNOT, a, b),
          Gate::one(GateKind::RZ, a, -kPi / 2), Gate::one(GateKind::RZ, b, -kPi / 2),
          Gate::one(GateKind::RX, b, -kPi / 2), Gate::one(GateKind::RZ, b, kPi / 2)};
    }
    default:
      return {g};
  }
}

int depth(const Circuit& c) {
  std::vector<int> level(c.n, 0);
  int out = 0;
  for (const auto& g : c.gates) {
    for (const auto& basis : decompose_for_depth(g)) {
      int d = level[basis.q0];
      if (gate_arity(basis.kind) == 2) d = std::max(d, level[basis.q1]);
      ++d;
      level[basis.q0] = d;
      if (gate_arity(basis.kind) == 2) level[basis.q1] = d;
      out = std::max(out, d);
    }
  }
  return out;
}

std::map<std::string, int> basis_gate_census(const Circuit& c) {
  std::map<std::string, int> census;
  for (const auto& g : c.gates)
    for (const auto& basis : decompose_for_depth(g))
      census[gate_name(basis.kind)]++;
  return census;
}

namespace {

// Cyclic Jacobi eigensolver for small dense symmetric matrices.
void jacobi_eigensymmetric(std::vector<double>& a, int n,
                           std::vector<double>& eigvals,
                           std::vector<double>& eigvecs) {
  eigvecs.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) eigvecs[i * n + i] = 1.0;
  auto A = [&](int i, int j) -> double& { return a[i * n + j]; };
  auto V = [&](int i, int j) -> double& { return eigvecs[i * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(A(p, q)) < 1e-300) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cth = 1.0 / std::sqrt(t * t + 1.0);
        const double sth = t * cth;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = cth * akp - sth * akq;
          A(k, q) = sth * akp + cth * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = cth * apk - sth * aqk;
          A(q, k) = sth * apk + cth * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = cth * vkp - sth * vkq;
          V(k, q) = sth * vkp + cth * vkq;
        }
      }
    }
  }
  eigvals.resize(n);
  for (int i = 0; i < n; ++i) eigvals[i] = A(i, i);
}

}  // namespace

void apply_exact_xy_mixer(Statevector& sv,
                          const std::vector<std::pair<int, int>>& pairs,
                          double beta) {
  const int n = sv.n();
  auto& amp = sv.amplitudes();
  for (int weight = 0; weight <= n; ++weight) {
    std::vector<uint64_t> basis;
    double mass = 0.0;
    for (uint64_t k = 0; k < sv.dim(); ++k) {
      if (__builtin_popcountll(k) == weight) {
        basis.push_back(k);
        mass += std::norm(amp[k]);
      }
    }
    if (mass < 1e-28 || basis.size() < 2) continue;
    const int dim = static_cast<int>(basis.size());
    std::vector<int> index_of(sv.dim(), -1);
    for (int i = 0; i < dim; ++i) index_of[basis[i]] = i;

    // M restricted to the sector: element 2 between states that differ by
    // moving one excitation across a mixer pair.
    std::vector<double> mat(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
      const uint64_t b = basis[i];
      for (auto [p, q] : pairs) {
        const uint64_t bp = uint64_t{1} << p, bq = uint64_t{1} << q;
        if (static_cast<bool>(b & bp) == static_cast<bool>(b & bq)) continue;
        const int j = index_of[b ^ bp ^ bq];
        mat[i * dim + j] += 2.0;
      }
    }
    std::vector<double> eigvals, eigvecs;
    jacobi_eigensymmetric(mat, dim, eigvals, eigvecs);

    std::vector<cdouble> in(dim), out(dim, cdouble{0, 0});
    for (int i = 0; i < dim; ++i) in[i] = amp[basis[i]];
    // exp(-i beta M) = V diag(exp(-i beta w)) V^T
    std::vector<cdouble> tmp(dim, cdouble{0, 0});
    for (int e = 0; e < dim; ++e) {
      cdouble proj{0, 0};
      for (int i = 0; i < dim; ++i) proj += eigvecs[i * dim + e] * in[i];
      tmp[e] = std::polar(1.0, -beta * eigvals[e]) * proj;
    }
    for (int i = 0; i < dim; ++i) {
      cdouble v{0, 0};
      for (int e = 0; e < dim; ++e) v += eigvecs[i * dim + e] * tmp[e];
      out[i] = v;
    }
    for (int i = 0; i < dim; ++i) amp[basis[i]] = out[i];
  }
}

}  // namespace hpdesign
