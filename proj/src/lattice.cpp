#include "hpdesign/lattice.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <unordered_map>

#include "hpdesign/errors.hpp"
#include "hpdesign/instance_io.hpp"
#include "hpdesign/threads.hpp"

namespace hpdesign {

namespace {

constexpr std::array<char, 4> kMoveChars = {'R', 'L', 'U', 'D'};
constexpr std::array<int, 4> kDx = {1, -1, 0, 0};
constexpr std::array<int, 4> kDy = {0, 0, 1, -1};

int move_index(char c) {
  switch (c) {
    case 'R': return 0;
    case 'L': return 1;
    case 'U': return 2;
    case 'D': return 3;
    default:
      fail(ErrorCode::BadToken,
           std::string("invalid move character '") + c + "' (want R/L/U/D)");
  }
}

// The 8 point-group elements as permutations of {R,L,U,D}.
// id, rot90, rot180, rot270, mirror-x, mirror-y, diagonal, antidiagonal.
constexpr std::array<std::array<uint8_t, 4>, 8> kPointGroup = {{
    {0, 1, 2, 3},
    {2, 3, 1, 0},  // R->U, L->D, U->L, D->R
    {1, 0, 3, 2},  // R->L, L->R, U->D, D->U
    {3, 2, 0, 1},  // R->D, L->U, U->R, D->L
    {0, 1, 3, 2},  // y -> -y
    {1, 0, 2, 3},  // x -> -x
    {2, 3, 0, 1},  // (x,y) -> (y,x)
    {3, 2, 1, 0},  // (x,y) -> (-y,-x)
}};

std::string apply_point(const std::string& moves,
                        const std::array<uint8_t, 4>& perm) {
  std::string out(moves.size(), ' ');
  for (size_t i = 0; i < moves.size(); ++i)
    out[i] = kMoveChars[perm[move_index(moves[i])]];
  return out;
}

bool satisfies_convention(const std::string& moves) {
  if (moves.empty() || moves[0] != 'R') return false;
  for (char c : moves) {
    if (c == 'R') continue;
    return c == 'U';  // first turn must be U
  }
  return true;  // straight chain
}

// Unique point-group image with first move R and first turn U.
std::string point_canonical(const std::string& moves) {
  for (const auto& perm : kPointGroup) {
    std::string img = apply_point(moves, perm);
    if (satisfies_convention(img)) return img;
  }
  fail(ErrorCode::BadToken, "no canonical image (corrupt move string)");
}

std::string reversed_moves(const std::string& moves) {
  std::string out(moves.rbegin(), moves.rend());
  for (char& c : out) c = kMoveChars[move_index(c) ^ 1];  // R<->L, U<->D
  return out;
}

std::vector<Point> walk_coords(const std::string& moves) {
  std::vector<Point> coords;
  coords.reserve(moves.size() + 1);
  coords.push_back({0, 0});
  for (char c : moves) {
    int m = move_index(c);
    Point p = coords.back();
    coords.push_back({p.x + kDx[m], p.y + kDy[m]});
  }
  return coords;
}

void check_self_avoiding(const std::vector<Point>& coords) {
  auto sorted = coords;
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      fail(ErrorCode::SelfIntersection, "walk revisits a lattice site");
}

struct CanonicalWalk {
  std::string moves;
  bool reversed = false;  // canonical form came from the reversed chain
  bool reversal_symmetric = false;
};

CanonicalWalk canonicalize(const std::string& moves) {
  std::string fwd = point_canonical(moves);
  std::string bwd = point_canonical(reversed_moves(moves));
  CanonicalWalk out;
  out.reversal_symmetric = (fwd == bwd);
  out.reversed = (bwd < fwd);
  out.moves = out.reversed ? bwd : fwd;
  return out;
}

Structure make_structure(const CanonicalWalk& canon,
                         const std::string& original) {
  Structure s;
  s.moves = canon.moves;
  s.coords = walk_coords(canon.moves);
  s.original_moves = original;
  bool straight =
      std::all_of(canon.moves.begin(), canon.moves.end(),
                  [](char c) { return c == 'R'; });
  s.point_orbit = straight ? 4 : 8;
  s.reversal_symmetric = canon.reversal_symmetric;
  return s;
}

uint32_t reverse_bits(uint32_t s, int n) {
  uint32_t out = 0;
  for (int i = 0; i < n; ++i)
    if ((s >> i) & 1u) out |= 1u << (n - 1 - i);
  return out;
}

int masked_energy(const std::vector<uint32_t>& pair_masks, uint32_t s) {
  int e = 0;
  for (uint32_t m : pair_masks) e -= ((s & m) == m);
  return e;
}

std::vector<uint32_t> contact_pair_masks(const ContactMap& cm) {
  std::vector<uint32_t> masks;
  masks.reserve(cm.contacts.size());
  for (auto [i, j] : cm.contacts) masks.push_back((1u << i) | (1u << j));
  return masks;
}

// Structures with the same {contact map, reversed contact map} pair are
// indistinguishable to every sequence; the census groups them.
struct ContactClass {
  std::vector<uint32_t> fwd_masks;
  bool reversal_invariant = false;
  std::vector<int> members;
};

std::string contact_key(const ContactMap& cm) {
  std::string key;
  key.reserve(cm.contacts.size() * 2);
  for (auto [i, j] : cm.contacts) {
    key.push_back(static_cast<char>(i));
    key.push_back(static_cast<char>(j));
  }
  return key;
}

std::vector<ContactClass> build_contact_classes(
    const std::vector<Structure>& structures) {
  std::vector<ContactClass> classes;
  std::unordered_map<std::string, int> index;
  for (size_t si = 0; si < structures.size(); ++si) {
    ContactMap fwd = contact_map(structures[si]);
    ContactMap bwd = fwd.reversed();
    std::string kf = contact_key(fwd);
    std::string kb = contact_key(bwd);
    std::string key = kf <= kb ? kf + '|' + kb : kb + '|' + kf;
    auto [it, inserted] = index.try_emplace(key, classes.size());
    if (inserted) {
      ContactClass c;
      c.fwd_masks = contact_pair_masks(fwd);
      c.reversal_invariant = (kf == kb);
      classes.push_back(std::move(c));
    }
    classes[it->second].members.push_back(static_cast<int>(si));
  }
  return classes;
}

std::string bundled_instance_path(int n, int n_h,
                                  const std::string& bundle_dir) {
  std::string dir = bundle_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("HPDESIGN_DATA")) dir = env;
  }
#ifdef HPDESIGN_DATA_DIR
  if (dir.empty()) dir = HPDESIGN_DATA_DIR;
#endif
  if (dir.empty())
    fail(ErrorCode::BoundExceeded,
         "n exceeds the enumeration bound and no bundle directory is set");
  return dir + "/instances/inst_n" + std::to_string(n) + "_h" +
         std::to_string(n_h) + ".txt";
}

}  // namespace

std::string Sequence::to_string() const {
  std::string out(n, '0');
  for (int i = 0; i < n; ++i)
    if (bead_is_h(i)) out[i] = '1';
  return out;
}

Sequence Sequence::from_string(const std::string& s) {
  require(s.size() <= 32, ErrorCode::BoundExceeded, "sequence longer than 32");
  Sequence seq;
  seq.n = static_cast<int>(s.size());
  for (int i = 0; i < seq.n; ++i) {
    if (s[i] == '1')
      seq.bits |= 1u << i;
    else
      require(s[i] == '0', ErrorCode::BadToken, "sequence must be 0/1");
  }
  return seq;
}

Sequence Sequence::reversed(const Sequence& s) {
  return Sequence{reverse_bits(s.bits, s.n), s.n};
}

ContactMap ContactMap::reversed() const {
  ContactMap out;
  out.n = n;
  out.contacts.reserve(contacts.size());
  for (auto [i, j] : contacts) out.contacts.emplace_back(n - 1 - j, n - 1 - i);
  std::sort(out.contacts.begin(), out.contacts.end());
  return out;
}

Structure parse_structure(const std::string& text) {
  require(!text.empty(), ErrorCode::TooShort, "need at least one move (N >= 2)");
  require(text.size() <= 31, ErrorCode::BoundExceeded,
          "chains longer than 32 beads are not supported");
  for (char c : text) move_index(c);  // BadToken check
  check_self_avoiding(walk_coords(text));
  return make_structure(canonicalize(text), text);
}

bool canonicalization_reverses(const std::string& moves) {
  return canonicalize(moves).reversed;
}

ContactMap contact_map(const Structure& s) {
  ContactMap cm;
  cm.n = s.length();
  for (int i = 0; i + 2 < cm.n + 1; ++i) {
    for (int j = i + 2; j < cm.n; ++j) {
      int dx = s.coords[i].x - s.coords[j].x;
      int dy = s.coords[i].y - s.coords[j].y;
      if (std::abs(dx) + std::abs(dy) == 1) cm.contacts.emplace_back(i, j);
    }
  }
  return cm;
}

int hp_energy(const ContactMap& cm, const Sequence& seq) {
  require(seq.n == cm.n, ErrorCode::LengthMismatch,
          "sequence length does not match contact map");
  int e = 0;
  for (auto [i, j] : cm.contacts)
    if (seq.bead_is_h(i) && seq.bead_is_h(j)) --e;
  return e;
}

std::vector<Structure> enumerate_saws(int n) {
  require(n >= 2, ErrorCode::TooShort, "need n >= 2");
  require(n <= kEnumerationBound, ErrorCode::BoundExceeded,
          "enumeration supports n <= " + std::to_string(kEnumerationBound));
  std::vector<Structure> out;
  const int steps = n - 1;
  // Board indexed by offset coordinates; walks stay within +-steps.
  const int width = 2 * steps + 1;
  std::vector<uint8_t> occupied(width * width, 0);
  auto cell = [&](int x, int y) { return (y + steps) * width + (x + steps); };

  std::string moves;
  moves.reserve(steps);
  int x = 0, y = 0;
  occupied[cell(0, 0)] = 1;

  // Move order D < L < R < U matches lexicographic output order.
  constexpr std::array<char, 4> kLexOrder = {'D', 'L', 'R', 'U'};

  auto emit = [&] {
    std::string rev_canonical = point_canonical(reversed_moves(moves));
    if (moves > rev_canonical) return;  // reversed twin is the representative
    CanonicalWalk canon;
    canon.moves = moves;
    canon.reversal_symmetric = (moves == rev_canonical);
    out.push_back(make_structure(canon, moves));
  };

  auto dfs = [&](auto&& self, bool turned) -> void {
    if (static_cast<int>(moves.size()) == steps) {
      emit();
      return;
    }
    for (char c : kLexOrder) {
      if (moves.empty() && c != 'R') continue;
      if (!moves.empty() && !turned && c != 'R' && c != 'U') continue;
      int m = move_index(c);
      int nx = x + kDx[m], ny = y + kDy[m];
      if (occupied[cell(nx, ny)]) continue;
      occupied[cell(nx, ny)] = 1;
      x = nx;
      y = ny;
      moves.push_back(c);
      self(self, turned || c != 'R');
      moves.pop_back();
      x = nx - kDx[m];
      y = ny - kDy[m];
      occupied[cell(nx, ny)] = 0;
    }
  };
  dfs(dfs, false);
  return out;
}

CensusResult design_census(int n) {
  CensusResult result;
  result.n = n;
  result.structures = enumerate_saws(n);
  result.total_sequences = 1LL << n;
  result.entries.resize(result.structures.size());
  for (size_t i = 0; i < result.structures.size(); ++i)
    result.entries[i].structure_index = static_cast<int>(i);

  const auto classes = build_contact_classes(result.structures);
  const uint32_t seq_count = 1u << n;

  struct Partial {
    std::vector<long long> designability;
    std::vector<std::vector<Sequence>> designing;
    long long unique = 0;
  };
  std::vector<Partial> partials;
  std::mutex partials_mutex;

  parallel_chunks(0, seq_count, [&](std::size_t lo, std::size_t hi) {
    Partial part;
    part.designability.assign(result.structures.size(), 0);
    part.designing.resize(result.structures.size());
    for (uint32_t s = static_cast<uint32_t>(lo); s < hi; ++s) {
      uint32_t rs = reverse_bits(s, n);
      int best = 1;
      long long attained = 0;
      int arg_class = -1;
      for (size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        int e = masked_energy(cls.fwd_masks, s);
        if (!cls.reversal_invariant)
          e = std::min(e, masked_energy(cls.fwd_masks, rs));
        if (e < best) {
          best = e;
          attained = static_cast<long long>(cls.members.size());
          arg_class = static_cast<int>(c);
        } else if (e == best) {
          attained += static_cast<long long>(cls.members.size());
        }
      }
      if (attained == 1) {
        int structure = classes[arg_class].members[0];
        part.designability[structure]++;
        part.designing[structure].push_back(
            Sequence{s, n});
        part.unique++;
      }
    }
    std::lock_guard<std::mutex> lock(partials_mutex);
    partials.push_back(std::move(part));
  });

  for (const auto& part : partials) {
    result.unique_sequences += part.unique;
    for (size_t i = 0; i < result.structures.size(); ++i) {
      result.entries[i].designability += part.designability[i];
      auto& dst = result.entries[i].designing_sequences;
      dst.insert(dst.end(), part.designing[i].begin(), part.designing[i].end());
    }
  }
  for (auto& entry : result.entries) {
    std::sort(entry.designing_sequences.begin(),
              entry.designing_sequences.end(),
              [](const Sequence& a, const Sequence& b) { return a.bits < b.bits; });
  }
  return result;
}

FoldReport fold_verify(const Sequence& seq, const Structure& target,
                       double beta) {
  require(seq.n == target.length(), ErrorCode::LengthMismatch,
          "sequence length does not match target");
  const auto structures = enumerate_saws(target.length());
  const Sequence rev_seq = Sequence::reversed(seq);

  FoldReport report;
  int target_index = -1;
  int best = 1;
  std::vector<int> energies_fwd(structures.size());
  std::vector<int> energies_bwd(structures.size());
  for (size_t i = 0; i < structures.size(); ++i) {
    ContactMap cm = contact_map(structures[i]);
    energies_fwd[i] = hp_energy(cm, seq);
    energies_bwd[i] =
        structures[i].reversal_symmetric ? energies_fwd[i] : hp_energy(cm, rev_seq);
    int shape_e = std::min(energies_fwd[i], energies_bwd[i]);
    if (target_index < 0 && structures[i].moves == target.moves)
      target_index = static_cast<int>(i);
    if (shape_e < best) {
      best = shape_e;
      report.ground_structure_indices.clear();
    }
    if (shape_e == best)
      report.ground_structure_indices.push_back(static_cast<int>(i));
  }
  require(target_index >= 0, ErrorCode::BadToken,
          "target is not a canonical structure of this length");

  report.min_energy = best;
  for (int idx : report.ground_structure_indices)
    report.ground_structure_moves.push_back(structures[idx].moves);
  report.unique_ground_state_is_target =
      report.ground_structure_indices.size() == 1 &&
      report.ground_structure_indices[0] == target_index;

  // Boltzmann probability of the target structure over anchored walks;
  // each canonical walk stands for point_orbit forward and (unless
  // reversal-symmetric) point_orbit reversed embeddings.
  auto structure_mass = [&](size_t i) {
    const auto& s = structures[i];
    double mass = s.point_orbit * std::exp(-beta * energies_fwd[i]);
    if (!s.reversal_symmetric)
      mass += s.point_orbit * std::exp(-beta * energies_bwd[i]);
    return mass;
  };
  double z = 0.0;
  for (size_t i = 0; i < structures.size(); ++i) z += structure_mass(i);
  report.p_beta = structure_mass(target_index) / z;
  return report;
}

SequenceOptimum minimize_sequences(const ContactMap& cm, int n_h) {
  require(n_h >= 0 && n_h <= cm.n, ErrorCode::BadComposition,
          "n_h must lie in [0, n]");
  require(cm.n <= kMaxChainLength, ErrorCode::BoundExceeded,
          "brute force supports n <= " + std::to_string(kMaxChainLength));
  const auto masks = contact_pair_masks(cm);
  SequenceOptimum opt;
  opt.e_min = 1;
  if (n_h == 0) {
    opt.e_min = 0;
    opt.minimizers.push_back(Sequence{0, cm.n});
    return opt;
  }
  // Gosper's hack over all weight-n_h bitstrings.
  uint32_t s = (1u << n_h) - 1;
  const uint32_t limit = 1u << cm.n;
  while (s < limit) {
    int e = masked_energy(masks, s);
    if (e < opt.e_min) {
      opt.e_min = e;
      opt.minimizers.clear();
    }
    if (e == opt.e_min) opt.minimizers.push_back(Sequence{s, cm.n});
    uint32_t c = s & -s;
    uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return opt;
}

void verify_instance(const Instance& inst) {
  ContactMap cm = contact_map(inst.structure);
  require(cm.contacts == inst.contact_map.contacts &&
              cm.n == inst.contact_map.n,
          ErrorCode::NoValidInstance, "stored contact map is inconsistent");
  SequenceOptimum opt = minimize_sequences(cm, inst.n_h);
  require(opt.minimizers.size() == 1, ErrorCode::NoValidInstance,
          "weight-restricted optimum is not unique");
  require(opt.e_min == inst.e_min, ErrorCode::NoValidInstance,
          "stated e_min does not match the brute-force optimum");
  if (inst.solution) {
    require(inst.solution->bits == opt.minimizers[0].bits,
            ErrorCode::NoValidInstance, "stored solution is not the optimum");
  }
}

Instance select_instance(int n, int n_h, const std::string& bundle_dir) {
  require(n >= 2 && n <= kMaxChainLength, ErrorCode::BoundExceeded,
          "n must lie in [2, " + std::to_string(kMaxChainLength) + "]");
  require(n_h >= 0 && n_h <= n, ErrorCode::BadComposition,
          "n_h must lie in [0, n]");

  if (n > kEnumerationBound) {
    Instance inst = read_instance(bundled_instance_path(n, n_h, bundle_dir));
    require(inst.structure.length() == n && inst.n_h == n_h,
            ErrorCode::NoValidInstance, "bundled file does not match (n, n_h)");
    verify_instance(inst);
    return inst;
  }

  CensusResult census = design_census(n);
  std::vector<int> order(census.structures.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (census.entries[a].designability != census.entries[b].designability)
      return census.entries[a].designability > census.entries[b].designability;
    return census.structures[a].moves < census.structures[b].moves;
  });

  for (int idx : order) {
    if (census.entries[idx].designability == 0) break;
    ContactMap cm = contact_map(census.structures[idx]);
    SequenceOptimum opt = minimize_sequences(cm, n_h);
    if (opt.minimizers.size() != 1) continue;
    const Sequence& s = opt.minimizers[0];
    const auto& designing = census.entries[idx].designing_sequences;
    bool designs = std::any_of(designing.begin(), designing.end(),
                               [&](const Sequence& d) { return d == s; });
    if (!designs) continue;
    Instance inst;
    inst.structure = census.structures[idx];
    inst.contact_map = cm;
    inst.n_h = n_h;
    inst.e_min = opt.e_min;
    inst.solution = s;
    return inst;
  }
  fail(ErrorCode::NoValidInstance,
       "no structure of length " + std::to_string(n) +
           " admits a unique weight-" + std::to_string(n_h) +
           " optimum that folds back to it");
}

}  // namespace hpdesign
