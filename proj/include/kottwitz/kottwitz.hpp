#pragma once

#include <utility>
#include <vector>

#include "kottwitz/galois.hpp"
#include "kottwitz/root_datum.hpp"

namespace kottwitz {

// A class in pi_1(G)_Gamma: free coordinates plus torsion residues of the
// cokernel of [simple coroots | sigma - 1].
struct KappaClass {
  Vec free;
  Vec torsion;
  bool operator==(const KappaClass& o) const {
    return free == o.free && torsion == o.torsion;
  }
  bool operator!=(const KappaClass& o) const { return !(*this == o); }
};

// An unramified class with all derived data: dominant representative,
// slope vector, kappa invariant, anti-dominant reduction, Levi subset and
// minimal-length coset representatives.
struct KottwitzPoint {
  CoinvariantClass cls;           // relative-dominant representative
  QVec slope;                     // nu_b, absolutely dominant
  KappaClass kappa;
  CoinvariantClass hn_reduction;  // b_T, relative anti-dominant
  std::vector<int> levi;          // orbit indices pairing to 0 with slope
  std::vector<WeylWord> coset_reps;
  std::vector<IntMat> coset_rep_mats;
  std::vector<int> coset_rep_rel_len;
};

Cokernel pi1_cokernel(const CoinvariantLattice& lat);
KappaClass kappa_class(const CoinvariantLattice& lat, const Cokernel& pi1, const Vec& lift);

KottwitzPoint unramified_point(const CoinvariantLattice& lat, const CoinvariantClass& c);

// All dominant classes <= mu_Gamma in the coinvariant order, with full
// point data; sorted by height descending (mu-ordinary first), then by
// class coordinates.
std::vector<KottwitzPoint> enumerate_bgmu_un(const CoinvariantLattice& lat, const Vec& mu);

// (mu-ordinary point, image of mu in pi_1(G)_Gamma).
std::pair<KottwitzPoint, KappaClass> mu_ordinary_and_basic(const CoinvariantLattice& lat,
                                                           const Vec& mu);

// <2rho, lift(c)>; lift-independent since 2rho is Gamma-invariant.
long long component_dimension(const CoinvariantLattice& lat, const CoinvariantClass& c);

// Concave slope sequences with integral segment breakpoints lying below
// the polygon of mu with the same endpoint; sorted lexicographically
// descending (mu first, basic last).
using Polygon = std::vector<Rational>;
std::vector<Polygon> bgmu_gln(int n, const Vec& mu);
bool polygon_is_integral(const Polygon& p);

// Exponent vectors (in the character lattice) of the three factors of
// delta_B^w: positive-stays-positive part, Levi part, sign-flip part.
// Their sum is w(2rho).
struct ModulusParts {
  Vec pos;
  Vec zero;
  Vec neg;
};
ModulusParts modulus_decomposition(const CoinvariantLattice& lat, const WeylWord& w,
                                   const KottwitzPoint& pt);

}  // namespace kottwitz
