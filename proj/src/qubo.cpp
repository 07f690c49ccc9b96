#include "hpdesign/qubo.hpp"

#include <cmath>
#include <limits>

#include "hpdesign/errors.hpp"

namespace hpdesign {

QuboModel build_qubo(const ContactMap& cm, int n_h, double lambda) {
  require(lambda > 0.0, ErrorCode::BadLambda, "lambda must be positive");
  require(n_h >= 0 && n_h <= cm.n, ErrorCode::BadComposition,
          "n_h must lie in [0, n]");
  QuboModel m;
  m.n = cm.n;
  m.lambda = lambda;
  m.n_h = n_h;
  m.contacts = cm;
  m.constant = lambda * n_h * n_h;
  m.linear.assign(m.n, lambda * (1.0 - 2.0 * n_h));
  m.quadratic.assign(m.n, std::vector<double>(m.n, 0.0));
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) m.quadratic[i][j] = 2.0 * lambda;
  for (auto [i, j] : cm.contacts) m.quadratic[i][j] -= 1.0;
  return m;
}

double qubo_energy(const QuboModel& m, uint32_t bits) {
  double e = m.constant;
  for (int i = 0; i < m.n; ++i) {
    if (!((bits >> i) & 1u)) continue;
    e += m.linear[i];
    for (int j = i + 1; j < m.n; ++j)
      if ((bits >> j) & 1u) e += m.quadratic[i][j];
  }
  return e;
}

double qubo_energy(const QuboModel& m, const Sequence& s) {
  require(s.n == m.n, ErrorCode::LengthMismatch,
          "bitstring length does not match model");
  return qubo_energy(m, s.bits);
}

DiagonalCost::DiagonalCost(const QuboModel& m)
    : n_(m.n), constant_(m.constant), linear_(m.linear) {
  for (int i = 0; i < m.n; ++i) {
    for (int j = i + 1; j < m.n; ++j) {
      if (m.quadratic[i][j] == 0.0) continue;
      pair_coeff_.push_back(m.quadratic[i][j]);
      pair_mask_.push_back((1u << i) | (1u << j));
    }
  }
  if (n_ <= kMaterializeBound) {
    table_.resize(uint64_t{1} << n_);
    for (uint64_t k = 0; k < table_.size(); ++k) table_[k] = evaluate(k);
  }
}

double DiagonalCost::evaluate(uint64_t index) const {
  const uint32_t bits = static_cast<uint32_t>(index);
  double e = constant_;
  for (int i = 0; i < n_; ++i)
    if ((bits >> i) & 1u) e += linear_[i];
  for (size_t p = 0; p < pair_mask_.size(); ++p)
    if ((bits & pair_mask_[p]) == pair_mask_[p]) e += pair_coeff_[p];
  return e;
}

BruteForceResult brute_force_min(const QuboModel& m, bool weight_restricted) {
  require(m.n <= kMaxChainLength, ErrorCode::BoundExceeded,
          "brute force supports n <= " + std::to_string(kMaxChainLength));
  constexpr double kTieTol = 1e-9;
  BruteForceResult result;
  result.min_value = std::numeric_limits<double>::infinity();
  auto consider = [&](uint32_t bits) {
    double e = qubo_energy(m, bits);
    if (e < result.min_value - kTieTol) {
      result.min_value = e;
      result.minimizer_count = 0;
      result.minimizers.clear();
    }
    if (e <= result.min_value + kTieTol) {
      if (e < result.min_value) result.min_value = e;
      result.minimizer_count++;
      if (result.minimizers.size() < BruteForceResult::kMaxStoredMinimizers)
        result.minimizers.push_back(bits);
    }
  };
  if (weight_restricted) {
    if (m.n_h == 0) {
      consider(0);
      return result;
    }
    uint32_t s = (1u << m.n_h) - 1;
    const uint64_t limit = uint64_t{1} << m.n;
    while (s < limit) {
      consider(s);
      uint32_t c = s & -s;
      uint32_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  } else {
    const uint64_t limit = uint64_t{1} << m.n;
    for (uint64_t s = 0; s < limit; ++s) consider(static_cast<uint32_t>(s));
  }
  return result;
}

}  // namespace hpdesign
