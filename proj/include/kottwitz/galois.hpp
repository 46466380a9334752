#pragma once

#include <string>
#include <vector>

#include "kottwitz/root_datum.hpp"

namespace kottwitz {

// An automorphism of the cocharacter lattice normalizing the based root
// datum (a diagram automorphism, possibly composed with -w0 style signs as
// in the unitary presentation). sigma must permute the simple coroots.
struct GaloisTwist {
  IntMat sigma;
  int order = 1;
};

GaloisTwist trivial_twist(int rank);

// A class in X_*(T)_Gamma, stored in the normal-form coordinates of its
// lattice: a free-part vector and torsion residues normalized to [0, d).
struct CoinvariantClass {
  Vec free;
  Vec torsion;

  bool operator==(const CoinvariantClass& o) const {
    return free == o.free && torsion == o.torsion;
  }
  bool operator!=(const CoinvariantClass& o) const { return !(*this == o); }
  bool operator<(const CoinvariantClass& o) const {
    if (free != o.free) return free < o.free;
    return torsion < o.torsion;
  }
};

// X_*(T)_Gamma = coker(sigma - 1) together with everything the Kottwitz
// layer needs: Galois orbits of simple coroots (the relative index set),
// their classes, relative simple reflections realized as sigma-commuting
// absolute Weyl words, and the invariant sublattice X_*(A).
struct CoinvariantLattice {
  RootDatum rd;
  GaloisTwist twist;
  IntMat sigma_fun;  // action on functionals: (sigma^{-1})^T
  Cokernel coker;    // of (sigma - 1)

  std::vector<int> coroot_perm;            // sigma(alpha_i^vee) = alpha_{perm[i]}^vee
  std::vector<std::vector<int>> orbits;    // relative index set J, each sorted
  std::vector<CoinvariantClass> alpha;     // class of any orbit member
  std::vector<Vec> alpha_inv_sum;          // sum of the distinct coroots in the orbit
  std::vector<Vec> orbit_root_sum;         // Gamma-invariant functional sum over the orbit
  std::vector<WeylWord> rel_reflection;    // longest element of the orbit parabolic
  std::vector<IntMat> rel_reflection_mat;
  std::vector<Vec> inv_basis;              // basis of X_*(A) = ker(sigma - 1)

  int free_rank() const { return coker.free_rank(); }
  std::vector<long long> torsion() const { return coker.torsion_orders(); }
  std::string display() const { return coker.display(); }
};

CoinvariantLattice coinvariants(const RootDatum& rd, const GaloisTwist& twist);

CoinvariantClass project_to_coinvariants(const CoinvariantLattice& lat, const Vec& v);
Vec class_lift(const CoinvariantLattice& lat, const CoinvariantClass& c);

CoinvariantClass class_add(const CoinvariantLattice& lat, const CoinvariantClass& a,
                           const CoinvariantClass& b);
CoinvariantClass class_sub(const CoinvariantLattice& lat, const CoinvariantClass& a,
                           const CoinvariantClass& b);
CoinvariantClass class_scale(const CoinvariantLattice& lat, long long n,
                             const CoinvariantClass& a);
bool class_is_zero(const CoinvariantClass& c);

// Pairing of a Gamma-invariant character functional with a class.
long long coinvariant_pairing(const CoinvariantLattice& lat, const Vec& f,
                              const CoinvariantClass& c);

// b - a is a nonnegative integral combination of the relative simple
// classes alpha_i (free and torsion parts both accounted for).
bool coinvariant_leq(const CoinvariantLattice& lat, const CoinvariantClass& a,
                     const CoinvariantClass& b);

bool is_dominant_coinvariant(const CoinvariantLattice& lat, const CoinvariantClass& c);

// Action of the relative simple reflection for orbit index o.
CoinvariantClass relative_reflect(const CoinvariantLattice& lat, int o,
                                  const CoinvariantClass& c);

// Relative Weyl sort into the closed dominant (resp. antidominant) cone.
// The returned word is the concatenation of the applied relative
// reflections as one absolute word; rel_letters lists the orbit indices.
struct RelativeSort {
  CoinvariantClass cls;
  WeylWord word;
  std::vector<int> rel_letters;
};
RelativeSort relative_dominant_representative(const CoinvariantLattice& lat,
                                              CoinvariantClass c);
RelativeSort relative_antidominant_representative(const CoinvariantLattice& lat,
                                                  CoinvariantClass c);

// All elements of the relative Weyl group as matrices on X_*(T), paired
// with a shortest relative word (absolute letters; rel_len counts relative
// letters). BFS order: by relative length, then discovery.
struct RelativeWeylElement {
  IntMat mat;
  WeylWord word;
  int rel_len = 0;
};
std::vector<RelativeWeylElement> relative_weyl_elements(const CoinvariantLattice& lat,
                                                        long long cap = kDefaultCap);

// Gamma-average of a lift: the slope vector of the class.
QVec galois_average(const CoinvariantLattice& lat, const Vec& v);

// Full Galois norm: sum of sigma^j(v) over j < order (an element of X_*(A)).
Vec galois_norm(const CoinvariantLattice& lat, const Vec& v);

}  // namespace kottwitz
