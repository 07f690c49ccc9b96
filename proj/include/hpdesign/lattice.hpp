#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hpdesign {

/// Longest chain for which conformations and sequences are enumerated
/// exhaustively. Above this, instances come from bundled files.
inline constexpr int kEnumerationBound = 14;

/// Longest chain supported anywhere (instance files, brute-force search).
inline constexpr int kMaxChainLength = 28;

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// HP sequence over n beads: bit i set means bead i is hydrophobic.
struct Sequence {
  uint32_t bits = 0;
  int n = 0;

  int weight() const { return __builtin_popcount(bits); }
  bool bead_is_h(int i) const { return (bits >> i) & 1u; }
  std::string to_string() const;  // bead 0 leftmost
  static Sequence from_string(const std::string& s);
  static Sequence reversed(const Sequence& s);
  friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// Self-avoiding walk on the square lattice, stored in canonical form:
/// first move R, first turn (if any) U, and lexicographically no larger
/// than its chain reversal. The symmetry group quotiented out is the
/// 8-element point group of the lattice together with chain reversal.
struct Structure {
  std::string moves;             // canonical, over {R,L,U,D}, length n-1
  std::vector<Point> coords;     // derived from moves, bead 0 at origin
  std::string original_moves;    // as supplied before canonicalization
  int point_orbit = 0;           // walks per point-group orbit: 4 or 8
  bool reversal_symmetric = false;

  int length() const { return static_cast<int>(coords.size()); }
  /// Number of distinct anchored walks this canonical form represents.
  long long orbit_size() const {
    return reversal_symmetric ? point_orbit : 2LL * point_orbit;
  }
};

/// Lattice contacts of a structure: pairs (i, j) with j >= i+2 whose beads
/// sit on adjacent sites. Stored with i < j.
struct ContactMap {
  int n = 0;
  std::vector<std::pair<int, int>> contacts;

  int size() const { return static_cast<int>(contacts.size()); }
  /// Contact map of the reversed chain (indices mapped i -> n-1-i).
  ContactMap reversed() const;
};

struct Instance {
  Structure structure;
  ContactMap contact_map;
  int n_h = 0;
  int e_min = 0;
  std::optional<Sequence> solution;
};

Structure parse_structure(const std::string& text);

/// True when the canonical form of `moves` is reached via chain reversal;
/// data attached to the original orientation (solutions) must be reversed
/// along with it.
bool canonicalization_reverses(const std::string& moves);

ContactMap contact_map(const Structure& s);
int hp_energy(const ContactMap& cm, const Sequence& seq);

/// All canonical self-avoiding walks of n beads in lexicographic move
/// order. Throws BoundExceeded above kEnumerationBound.
std::vector<Structure> enumerate_saws(int n);

struct CensusEntry {
  int structure_index = 0;       // into the enumerate_saws(n) ordering
  long long designability = 0;   // sequences whose unique ground state this is
  std::vector<Sequence> designing_sequences;
};

struct CensusResult {
  int n = 0;
  std::vector<Structure> structures;
  std::vector<CensusEntry> entries;     // one per structure, same order
  long long unique_sequences = 0;       // sequences with a unique ground state
  long long total_sequences = 0;        // 2^n
};

/// Exhaustive designability census: ground-state conformation sets for all
/// 2^n sequences over all canonical walks of length n.
CensusResult design_census(int n);

struct FoldReport {
  std::vector<int> ground_structure_indices;  // into enumerate_saws(n)
  std::vector<std::string> ground_structure_moves;
  bool unique_ground_state_is_target = false;
  int min_energy = 0;
  double p_beta = 0.0;  // Boltzmann probability of the target structure
};

/// Exact fold test of seq against target: ground-state structure set over
/// all conformations, and the target's Boltzmann probability at inverse
/// temperature beta (orbit-weighted over anchored walks).
FoldReport fold_verify(const Sequence& seq, const Structure& target,
                       double beta);

/// Weight-restricted sequence optimum on a fixed structure: minimum of
/// hp_energy over all sequences of Hamming weight n_h, with all minimizers.
struct SequenceOptimum {
  int e_min = 0;
  std::vector<Sequence> minimizers;
};
SequenceOptimum minimize_sequences(const ContactMap& cm, int n_h);

/// Builds the design instance for (n, n_h): the most designable structure
/// whose weight-n_h optimum is unique and whose optimal sequence folds
/// uniquely back to it. For n above the enumeration bound a bundled
/// instance file is loaded (see instance_io) and re-verified for
/// uniqueness. bundle_dir empty means: $HPDESIGN_DATA, else the compiled-in
/// data directory.
Instance select_instance(int n, int n_h, const std::string& bundle_dir = {});

/// Re-checks that inst.e_min/solution describe the unique weight-restricted
/// optimum of its structure; throws NoValidInstance otherwise.
void verify_instance(const Instance& inst);

}  // namespace hpdesign
