#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kottwitz/root_datum.hpp"

namespace kottwitz {

// Signed formal combination of dominant character symbols chi(lambda),
// keyed by lambda. Vanishing certifies that the Weyl module stays
// irreducible mod ell.
struct JantzenSum {
  std::map<Vec, long long> terms;
  bool vanishes() const {
    for (const auto& [k, v] : terms)
      if (v != 0) return false;
    return true;
  }
};

// Integer rho-like shift for the dot action: pairs to 1 with every simple
// root. (1,...,1) in the adjoint realization, (n-1,...,1,0) for GL_n.
Vec dot_action_rho(const RootDatum& rd);

JantzenSum jantzen_sum(const RootDatum& rd, const Vec& mu, long long ell);
bool is_tilting(const RootDatum& rd, const Vec& mu, long long ell);

// Closed-form type-A test; mu in the same coordinates the root datum uses.
bool type_a_criterion(const RootDatum& rd, const Vec& mu, long long ell);

// Primes below the sum-formula bound at which mu fails to be tilting.
std::set<long long> tilting_primes(const RootDatum& rd, const Vec& mu);

// Largest pairing <mu + rho, root>; the sum is empty for ell >= this.
long long jantzen_bound(const RootDatum& rd, const Vec& mu);

long long coxeter_number(const RootDatum& rd);

bool is_very_good(long long ell, const std::string& type_tag);

bool is_prime(long long p);

}  // namespace kottwitz
