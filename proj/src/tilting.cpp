#include "kottwitz/tilting.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace kottwitz {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Vec dot_action_rho(const RootDatum& rd) {
  if (rd.type_tag.rfind("GL", 0) == 0) {
    Vec r(rd.rank);
    for (int i = 0; i < rd.rank; ++i) r[i] = rd.rank - 1 - i;
    return r;
  }
  return Vec(rd.rank, 1);
}

long long jantzen_bound(const RootDatum& rd, const Vec& mu) {
  const Vec shifted = vadd(mu, dot_action_rho(rd));
  long long best = 0;
  for (const Vec& root : rd.pos_roots) best = std::max(best, dot(root, shifted));
  return best;
}

long long coxeter_number(const RootDatum& rd) {
  return jantzen_bound(rd, vzero(rd.rank)) + 1;
}

JantzenSum jantzen_sum(const RootDatum& rd, const Vec& mu, long long ell) {
  if (!is_prime(ell)) throw std::invalid_argument("jantzen_sum: ell must be prime");
  if (!is_dominant(rd, mu)) throw std::invalid_argument("jantzen_sum: mu must be dominant");

  const Vec rho = dot_action_rho(rd);
  const Vec shifted = vadd(mu, rho);

  JantzenSum sum;
  for (size_t pi = 0; pi < rd.pos_roots.size(); ++pi) {
    const Vec& root = rd.pos_roots[pi];
    const Vec& coroot = rd.pos_coroots[pi];
    const long long p = dot(root, shifted);
    for (long long ml = ell; ml < p; ml += ell) {
      long long val = 0;
      for (long long m = ml; m % ell == 0; m /= ell) ++val;
      // s_{root, ml} dot mu, rho-shifted: reflect and translate back up.
      Vec y = vsub(shifted, vscale(p - ml, coroot));
      auto [y_dom, word] = dominant_representative(rd, y);
      bool singular = false;
      for (const Vec& simple : rd.simple_roots)
        if (dot(simple, y_dom) == 0) {
          singular = true;
          break;
        }
      if (singular) continue;
      sum.terms[vsub(y_dom, rho)] += word.sign() * val;
    }
  }
  for (auto it = sum.terms.begin(); it != sum.terms.end();)
    it = it->second == 0 ? sum.terms.erase(it) : std::next(it);
  return sum;
}

bool is_tilting(const RootDatum& rd, const Vec& mu, long long ell) {
  if (!is_prime(ell)) throw std::invalid_argument("is_tilting: ell must be prime");
  if (ell >= jantzen_bound(rd, mu)) return true;
  return jantzen_sum(rd, mu, ell).vanishes();
}

std::set<long long> tilting_primes(const RootDatum& rd, const Vec& mu) {
  std::set<long long> out;
  const long long bound = jantzen_bound(rd, mu);
  for (long long ell = 2; ell < bound; ++ell)
    if (is_prime(ell) && !is_tilting(rd, mu, ell)) out.insert(ell);
  return out;
}

bool type_a_criterion(const RootDatum& rd, const Vec& mu, long long ell) {
  if (!is_prime(ell)) throw std::invalid_argument("type_a_criterion: ell must be prime");
  if (!is_dominant(rd, mu)) throw std::invalid_argument("type_a_criterion: mu must be dominant");

  // Convert to GL coordinates where every positive coroot is e_i - e_j and
  // pairings are coordinate differences.
  std::vector<long long> x;
  if (rd.type_tag.rfind("GL", 0) == 0) {
    const Vec rho = dot_action_rho(rd);
    x.assign(rd.rank, 0);
    for (int i = 0; i < rd.rank; ++i) x[i] = mu[i] + rho[i];
  } else if (!rd.type_tag.empty() && rd.type_tag[0] == 'A') {
    // Adjoint coweight coordinates: x_j = sum_{i >= j} (mu_i + 1), padded
    // with a final zero; differences reproduce the pairings.
    const int n = rd.ss + 1;
    x.assign(n, 0);
    for (int j = n - 2; j >= 0; --j) x[j] = x[j + 1] + mu[j] + 1;
  } else {
    throw std::invalid_argument("type_a_criterion: root datum is not of type A");
  }

  const std::set<long long> values(x.begin(), x.end());
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const long long p = x[i] - x[j];
      assert(p > 0);
      long long s_pow = 1;  // ell^s
      long long rest = p;
      while (rest % ell == 0) {
        rest /= ell;
        s_pow *= ell;
      }
      const long long a = rest % ell;
      const long long b = rest / ell;
      if (b == 0) continue;
      const long long step = s_pow * ell;  // ell^{s+1}

      bool front = values.count(x[i] - a * s_pow) > 0;
      for (long long t = 1; front && t < b; ++t)
        front = values.count(x[i] - a * s_pow - t * step) > 0;
      bool back = true;
      for (long long t = 1; back && t <= b; ++t) back = values.count(x[i] - t * step) > 0;
      if (!front && !back) return false;
    }
  return true;
}

bool is_very_good(long long ell, const std::string& type_tag) {
  if (type_tag.rfind("GL", 0) == 0) {
    const long long n = std::stoll(type_tag.substr(2));
    return n % ell != 0;
  }
  if (type_tag.empty()) throw std::invalid_argument("is_very_good: empty type");
  const char family = type_tag[0];
  switch (family) {
    case 'A': {
      const long long n = std::stoll(type_tag.substr(1));
      return (n + 1) % ell != 0;
    }
    case 'B':
    case 'C':
    case 'D':
      return ell != 2;
    case 'F':
    case 'G':
      return ell != 2 && ell != 3;
    case 'E': {
      const long long n = std::stoll(type_tag.substr(1));
      if (n == 8) return ell != 2 && ell != 3 && ell != 5;
      return ell != 2 && ell != 3;
    }
    default:
      throw std::invalid_argument("is_very_good: unrecognized type '" + type_tag + "'");
  }
}

}  // namespace kottwitz
