#pragma once

#include <map>
#include <string>
#include <vector>

#include "kottwitz/characters.hpp"
#include "kottwitz/galois.hpp"
#include "kottwitz/kottwitz.hpp"
#include "kottwitz/weights.hpp"

namespace kottwitz {

// One twisted parabolic induction i(chi^w) x delta_P^{1/2} with its degree
// shift. chi_w holds values on the X_*(A) basis; delta_p_half_exp the
// q-exponent of the modulus square root on the same basis.
struct RedSummand {
  WeylWord w;
  int rel_len = 0;
  std::vector<CharacterValue> chi_w;
  QVec delta_p_half_exp;
  long long shift = 0;

  // chi^w times the modulus twist, per basis vector.
  std::vector<CharacterValue> twisted() const {
    std::vector<CharacterValue> out = chi_w;
    for (size_t i = 0; i < out.size(); ++i) out[i].k += delta_p_half_exp[i];
    return out;
  }
};

struct ReductionDatum {
  KottwitzPoint point;
  std::vector<RedSummand> summands;
};

ReductionDatum red_b_phi(const CoinvariantLattice& lat, const KottwitzPoint& pt,
                         const UnramifiedCharacter& chi);

struct WeilEntry {
  CharacterValue value;
  long long mult = 0;
  long long shift = 0;
};
using WeilCharacterMultiset = std::vector<WeilEntry>;  // sorted by value

// Frobenius eigenvalues contributed by the weights lying over w(b_T),
// merged by value. The eigenvalue of a weight is phi applied to its full
// Galois norm, which is lift-independent on classes.
WeilCharacterMultiset predicted_weil_summand(const WeightSystem& ws,
                                             const CoinvariantLattice& lat,
                                             const KottwitzPoint& pt, int w_index,
                                             const UnramifiedCharacter& phi);

struct AveragingBlockSummand {
  WeylWord w;
  CoinvariantClass target;  // w applied to the dominant class: one fiber class per rep
  WeilCharacterMultiset entries;
};
struct AveragingBlock {
  KottwitzPoint point;
  long long shift = 0;
  std::vector<AveragingBlockSummand> summands;
};
struct AveragingReport {
  bool pass = false;
  long long dim = 0;
  long long total_mult = 0;
  std::vector<AveragingBlock> blocks;
  std::map<CharacterValue, long long> lhs;  // union over (b, w)
  std::map<CharacterValue, long long> rhs;  // all weights of V_mu
  std::string detail;
};
AveragingReport refined_averaging_check(const CoinvariantLattice& lat, const Vec& mu,
                                        const UnramifiedCharacter& phi,
                                        long long cap = kDefaultCap);

// For mu whose weight classes are exactly {mu-ordinary class, central
// class}: the central block's eigenvalue multiset. Throws otherwise.
WeilCharacterMultiset quasi_minuscule_basic_contribution(const CoinvariantLattice& lat,
                                                         const Vec& mu,
                                                         const UnramifiedCharacter& phi,
                                                         long long cap = kDefaultCap);

// Independent path to the Red summand characters: enumerate the full
// relative Weyl group, group into cosets modulo the Levi by their action
// on the scaled slope, take the shortest element of each coset, twist chi.
// Returns the multiset of value tuples on the X_*(A) basis.
std::vector<std::vector<CharacterValue>> geometric_lemma_red_triv(const CoinvariantLattice& lat,
                                                                  const KottwitzPoint& pt,
                                                                  const UnramifiedCharacter& chi,
                                                                  long long cap = kDefaultCap);

}  // namespace kottwitz
