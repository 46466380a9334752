#pragma once

#include <map>
#include <vector>

#include "kottwitz/galois.hpp"
#include "kottwitz/kottwitz.hpp"
#include "kottwitz/root_datum.hpp"

namespace kottwitz {

// Weight-multiplicity table of the irreducible highest-weight module of
// the dual group in characteristic zero.
struct WeightSystem {
  Vec highest;
  std::map<Vec, long long> mults;
  long long dim = 0;
};

// Freudenthal recursion over the dominant weights, then Weyl-orbit
// expansion. Throws when the table would exceed cap weights.
WeightSystem freudenthal(const RootDatum& rd, const Vec& mu, long long cap = kDefaultCap);

// Independent oracle: product formula over positive roots.
long long weyl_dimension(const RootDatum& rd, const Vec& mu);

// Sum of multiplicities over the weights projecting to the class c.
long long coinvariant_weight_space(const WeightSystem& ws, const CoinvariantLattice& lat,
                                   const CoinvariantClass& c);

enum class MinusculeClass { Minuscule, QuasiMinuscule, Neither };
MinusculeClass classify_minuscule(const RootDatum& rd, const Vec& mu);

// Dominant coinvariant classes of the weights, deduplicated, as full
// Kottwitz points; canonically sorted (height descending, then class).
std::vector<KottwitzPoint> weight_orbits_to_kottwitz(const WeightSystem& ws,
                                                     const CoinvariantLattice& lat);

}  // namespace kottwitz
