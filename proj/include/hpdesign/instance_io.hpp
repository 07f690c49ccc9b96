#pragma once

#include <string>

#include "hpdesign/lattice.hpp"

namespace hpdesign {

/// Line-oriented instance file, version 1:
///   version 1
///   n 10
///   nh 4
///   emin -4
///   moves RULURDRDR
///   solution 0101101000   (optional)
Instance read_instance(const std::string& path);
Instance parse_instance_text(const std::string& text);
std::string instance_to_text(const Instance& inst);
void write_instance(const Instance& inst, const std::string& path);

/// write-temp-then-rename; used for every output file the CLI produces.
void atomic_write_file(const std::string& path, const std::string& contents);

}  // namespace hpdesign
