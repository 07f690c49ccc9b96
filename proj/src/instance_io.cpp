#include "hpdesign/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hpdesign/errors.hpp"

namespace hpdesign {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int version = -1, n = -1, nh = -1;
  long emin = 1;
  bool have_emin = false;
  std::string moves, solution;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "version")
      ls >> version;
    else if (key == "n")
      ls >> n;
    else if (key == "nh")
      ls >> nh;
    else if (key == "emin") {
      ls >> emin;
      have_emin = !ls.fail();
    } else if (key == "moves")
      ls >> moves;
    else if (key == "solution")
      ls >> solution;
    else
      fail(ErrorCode::IoError, "unknown instance key: " + key);
    require(!ls.fail(), ErrorCode::IoError, "malformed line: " + line);
  }
  require(version == 1, ErrorCode::IoError, "unsupported instance version");
  require(n >= 2 && nh >= 0 && nh <= n && have_emin && !moves.empty(),
          ErrorCode::IoError, "incomplete instance file");
  require(static_cast<int>(moves.size()) == n - 1, ErrorCode::IoError,
          "moves length does not match n");

  Instance inst;
  inst.structure = parse_structure(moves);
  inst.contact_map = contact_map(inst.structure);
  inst.n_h = nh;
  inst.e_min = static_cast<int>(emin);
  if (!solution.empty()) {
    Sequence s = Sequence::from_string(solution);
    require(s.n == n, ErrorCode::IoError, "solution length does not match n");
    // Canonicalization may have flipped the chain; keep the pair consistent.
    if (canonicalization_reverses(moves)) s = Sequence::reversed(s);
    require(s.weight() == nh, ErrorCode::IoError,
            "solution weight does not match nh");
    require(hp_energy(inst.contact_map, s) == inst.e_min, ErrorCode::IoError,
            "solution energy does not match emin");
    inst.solution = s;
  }
  return inst;
}

Instance read_instance(const std::string& path) {
  return parse_instance_text(read_file(path));
}

std::string instance_to_text(const Instance& inst) {
  std::ostringstream out;
  out << "version 1\n";
  out << "n " << inst.structure.length() << "\n";
  out << "nh " << inst.n_h << "\n";
  out << "emin " << inst.e_min << "\n";
  out << "moves " << inst.structure.moves << "\n";
  if (inst.solution) out << "solution " << inst.solution->to_string() << "\n";
  return out.str();
}

void write_instance(const Instance& inst, const std::string& path) {
  atomic_write_file(path, instance_to_text(inst));
}

void atomic_write_file(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorCode::IoError, "cannot write " + tmp);
    out << contents;
    require(static_cast<bool>(out), ErrorCode::IoError, "write failed: " + tmp);
  }
  require(std::rename(tmp.c_str(), path.c_str()) == 0, ErrorCode::IoError,
          "rename failed: " + path);
}

}  // namespace hpdesign
