#pragma once

#include <string>

#include "kottwitz/galois.hpp"
#include "kottwitz/root_datum.hpp"

namespace kottwitz {

// A group name is a split type ("A2", "GL3", "E8", ...) optionally twisted:
//   "2A<n>"  quasi-split unitary presentation on the GL_{n+1} lattice,
//            sigma(e_i) = -e_{n+2-i};
//   "2D<n>"  adjoint D_n with the two fork nodes swapped;
//   "3D4"    adjoint D_4 with the outer nodes rotated.
struct GroupSpec {
  std::string name;
  RootDatum rd;
  GaloisTwist twist;
};

GroupSpec build_group(const std::string& name);

}  // namespace kottwitz
