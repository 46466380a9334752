#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kottwitz/galois.hpp"
#include "kottwitz/rational.hpp"
#include "kottwitz/root_datum.hpp"
#include "kottwitz/weights.hpp"

namespace kottwitz {

// A value c * q^k with c an exact nonzero rational and q a formal symbol.
// k is rational internally so that square roots of the modulus compose
// exactly; user-facing values keep k integral.
struct CharacterValue {
  Rational c{1};
  Rational k{0};

  static CharacterValue one() { return CharacterValue{Rational(1), Rational(0)}; }

  CharacterValue times(const CharacterValue& o) const {
    return CharacterValue{c * o.c, k + o.k};
  }
  CharacterValue inverse() const { return CharacterValue{Rational(1) / c, -k}; }
  CharacterValue pow(long long e) const;

  bool is_one() const { return c == Rational(1) && k.is_zero(); }
  bool operator==(const CharacterValue& o) const { return c == o.c && k == o.k; }
  bool operator!=(const CharacterValue& o) const { return !(*this == o); }
  bool operator<(const CharacterValue& o) const {
    if (c != o.c) return c < o.c;
    return k < o.k;
  }
  std::string str() const;
  // Parses "c", "q^k", "c*q^k" with c = "n" or "n/d" and integer k.
  static CharacterValue parse(const std::string& s);
};

// One value per basis vector of the invariant sublattice X_*(A).
struct UnramifiedCharacter {
  std::vector<CharacterValue> values;
};

// chi(v) for v in X_*(A); throws if v is outside the invariant sublattice.
CharacterValue evaluate(const CoinvariantLattice& lat, const UnramifiedCharacter& chi,
                        const Vec& v);

// q^{-<rho, v>}: the positive-square-root modulus of the Borel.
CharacterValue delta_b_half(const CoinvariantLattice& lat, const Vec& v);

// t = chi(sum of the sigma-orbit of v), f = orbit size.
std::pair<CharacterValue, int> orbit_test_value(const CoinvariantLattice& lat,
                                                const UnramifiedCharacter& chi, const Vec& v);

struct ConditionLadder {
  bool weakly_generic = false;
  bool generic = false;
  bool cond3 = false;  // no w with chi*delta^{1/2} = (chi*delta^{-1/2})^w
  bool cond4 = false;  // squared orbit test values avoid the forbidden set
  bool weakly_normalized_regular = false;
  bool normalized_regular = false;
  bool regular = false;
};
ConditionLadder condition_ladder(const CoinvariantLattice& lat, const UnramifiedCharacter& chi,
                                 long long cap = kDefaultCap);

enum class MuRegMode { Strong, Decomposed };
struct MuRegularityReport {
  bool holds = false;
  std::string witness;
};
// Strong: orbit-test every difference of distinct weights of V_mu.
// Decomposed: greedily split mu into minuscule/quasi-minuscule dominant
// pieces plus a central remainder (or use the supplied pieces) and run the
// strong test on each piece.
MuRegularityReport mu_regularity(const CoinvariantLattice& lat, const UnramifiedCharacter& chi,
                                 const Vec& mu, MuRegMode mode,
                                 const std::vector<Vec>* supplied_pieces = nullptr,
                                 long long cap = kDefaultCap);

// Bernstein-Zelevinsky criterion: no pairwise ratio equal to q^{+-1}.
bool gln_principal_series_irreducible(const CoinvariantLattice& lat,
                                      const UnramifiedCharacter& chi);

}  // namespace kottwitz
