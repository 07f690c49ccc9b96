#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "hpdesign/lattice.hpp"

namespace hpdesign {

inline constexpr double kDefaultLambda = 1.1;

/// Sequence-design cost in QUBO form:
///   E(s) = -sum_{(i,j) in contacts} s_i s_j + lambda (sum_i s_i - n_h)^2
/// expanded to constant + linear + upper-triangular quadratic coefficients.
struct QuboModel {
  int n = 0;
  double constant = 0.0;
  std::vector<double> linear;                        // size n
  std::vector<std::vector<double>> quadratic;        // [i][j], i < j only
  double lambda = kDefaultLambda;
  int n_h = 0;
  ContactMap contacts;

  double quad(int i, int j) const { return quadratic[i][j]; }
};

QuboModel build_qubo(const ContactMap& cm, int n_h,
                     double lambda = kDefaultLambda);

/// Coefficient-form energy of a bitstring (bit i of `bits` = bead i).
double qubo_energy(const QuboModel& m, uint32_t bits);
double qubo_energy(const QuboModel& m, const Sequence& s);

/// Cost over computational-basis indices; materialized as a table up to
/// kMaterializeBound qubits (2^24 doubles ~ 128 MB), lazy above that.
class DiagonalCost {
 public:
  static constexpr int kMaterializeBound = 24;

  explicit DiagonalCost(const QuboModel& m);

  int n() const { return n_; }
  double operator()(uint64_t index) const {
    return table_.empty() ? evaluate(index) : table_[index];
  }
  bool materialized() const { return !table_.empty(); }

 private:
  double evaluate(uint64_t index) const;

  int n_ = 0;
  double constant_ = 0.0;
  std::vector<double> linear_;
  std::vector<double> pair_coeff_;   // flattened i*n+j, i<j
  std::vector<uint32_t> pair_mask_;
  std::vector<double> table_;
};

struct BruteForceResult {
  double min_value = 0.0;
  uint64_t minimizer_count = 0;
  std::vector<uint32_t> minimizers;  // capped at kMaxStoredMinimizers

  static constexpr uint64_t kMaxStoredMinimizers = 4096;
};

/// Exact minimum of the QUBO over all bitstrings, or over the weight-n_h
/// sector only when weight_restricted is set. Values within 1e-9 of the
/// minimum count as ties (well below the smallest coefficient gap).
BruteForceResult brute_force_min(const QuboModel& m, bool weight_restricted);

}  // namespace hpdesign
