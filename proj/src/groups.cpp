#include "kottwitz/groups.hpp"

#include <stdexcept>

namespace kottwitz {

namespace {

IntMat unitary_sigma(int n_gl) {
  // On the GL_{n_gl} lattice: e_i -> -e_{n_gl+1-i} (1-based).
  IntMat s(n_gl, Vec(n_gl, 0));
  for (int j = 0; j < n_gl; ++j) s[n_gl - 1 - j][j] = -1;
  return s;
}

IntMat dn_swap_sigma(int n) {
  // Swap the last two coordinates of the adjoint D_n realization.
  IntMat s = identity_mat(n);
  s[n - 2][n - 2] = 0;
  s[n - 1][n - 1] = 0;
  s[n - 2][n - 1] = 1;
  s[n - 1][n - 2] = 1;
  return s;
}

IntMat d4_rotation_sigma() {
  // Coordinates follow the coweight basis of D_4; rotate the outer nodes
  // 1 -> 3 -> 4 -> 1 (1-based), fixing the branch node 2.
  IntMat s(4, Vec(4, 0));
  s[2][0] = 1;  // e1 -> e3
  s[1][1] = 1;  // e2 fixed
  s[3][2] = 1;  // e3 -> e4
  s[0][3] = 1;  // e4 -> e1
  return s;
}

}  // namespace

GroupSpec build_group(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("build_group: empty name");

  GroupSpec g;
  g.name = name;

  if (name[0] == '2' || name[0] == '3') {
    const std::string base = name.substr(1);
    if (name[0] == '2' && base.size() >= 2 && base[0] == 'A') {
      int n = 0;
      try {
        n = std::stoi(base.substr(1));
      } catch (...) {
        throw std::invalid_argument("build_group: bad twisted type '" + name + "'");
      }
      if (n < 1) throw std::invalid_argument("build_group: 2A requires rank >= 1");
      g.rd = build_root_datum("GL" + std::to_string(n + 1));
      g.twist = GaloisTwist{unitary_sigma(n + 1), 2};
      return g;
    }
    if (name[0] == '2' && base.size() >= 2 && base[0] == 'D') {
      int n = 0;
      try {
        n = std::stoi(base.substr(1));
      } catch (...) {
        throw std::invalid_argument("build_group: bad twisted type '" + name + "'");
      }
      if (n < 3) throw std::invalid_argument("build_group: 2D requires rank >= 3");
      g.rd = build_root_datum("D" + std::to_string(n));
      g.twist = GaloisTwist{dn_swap_sigma(n), 2};
      return g;
    }
    if (name == "3D4") {
      g.rd = build_root_datum("D4");
      g.twist = GaloisTwist{d4_rotation_sigma(), 3};
      return g;
    }
    throw std::invalid_argument("build_group: unsupported twisted type '" + name + "'");
  }

  g.rd = build_root_datum(name);
  g.twist = trivial_twist(g.rd.rank);
  return g;
}

}  // namespace kottwitz
