#include "kottwitz/galois.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kottwitz {

GaloisTwist trivial_twist(int rank) { return GaloisTwist{identity_mat(rank), 1}; }

namespace {

int twist_order(const IntMat& sigma) {
  const int n = static_cast<int>(sigma.size());
  IntMat p = sigma;
  const IntMat id = identity_mat(n);
  for (int k = 1; k <= 64; ++k) {
    if (p == id) return k;
    p = mat_mul(sigma, p);
  }
  throw std::invalid_argument("galois twist does not have small finite order");
}

// sigma acts on characters by (sigma^{-1})^T so that pairings are preserved.
IntMat functional_action(const IntMat& sigma, int order) {
  const int n = static_cast<int>(sigma.size());
  IntMat inv = identity_mat(n);
  for (int k = 1; k < order; ++k) inv = mat_mul(sigma, inv);
  IntMat out(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = inv[j][i];
  return out;
}

}  // namespace

CoinvariantLattice coinvariants(const RootDatum& rd, const GaloisTwist& twist) {
  const int n = rd.rank;
  if (static_cast<int>(twist.sigma.size()) != n)
    throw std::invalid_argument("coinvariants: twist rank mismatch");

  CoinvariantLattice lat;
  lat.rd = rd;
  lat.twist = twist;
  lat.twist.order = twist_order(twist.sigma);
  lat.sigma_fun = functional_action(twist.sigma, lat.twist.order);

  // sigma must permute the simple coroots.
  lat.coroot_perm.assign(rd.ss, -1);
  for (int i = 0; i < rd.ss; ++i) {
    const Vec image = mat_vec(twist.sigma, rd.simple_coroots[i]);
    for (int j = 0; j < rd.ss; ++j) {
      if (image == rd.simple_coroots[j]) {
        lat.coroot_perm[i] = j;
        break;
      }
    }
    if (lat.coroot_perm[i] < 0)
      throw std::invalid_argument("coinvariants: twist does not permute simple coroots");
  }
  // The dual action must realize the same permutation on simple roots;
  // this is what makes heights and dominance independent of the lift.
  for (int i = 0; i < rd.ss; ++i) {
    if (mat_vec(lat.sigma_fun, rd.simple_roots[i]) != rd.simple_roots[lat.coroot_perm[i]])
      throw std::invalid_argument("coinvariants: twist is not a based root datum automorphism");
  }

  IntMat sigma_minus_one = mat_sub(twist.sigma, identity_mat(n));
  lat.coker = cokernel_of_columns(sigma_minus_one);
  lat.inv_basis = integer_kernel_basis(sigma_minus_one);

  // Orbits of the permutation, each listed ascending, ordered by minimum.
  std::vector<bool> seen(rd.ss, false);
  for (int i = 0; i < rd.ss; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      orb.push_back(j);
      j = lat.coroot_perm[j];
    }
    std::sort(orb.begin(), orb.end());
    lat.orbits.push_back(orb);
  }

  for (const auto& orb : lat.orbits) {
    // All members of the orbit share a class; keep the first one's.
    lat.alpha.push_back(project_to_coinvariants(lat, rd.simple_coroots[orb[0]]));
    for (int k : orb) {
      const CoinvariantClass c = project_to_coinvariants(lat, rd.simple_coroots[k]);
      if (c != lat.alpha.back())
        throw std::logic_error("coinvariants: orbit members in distinct classes");
    }

    Vec inv_sum = vzero(n);
    Vec root_sum = vzero(n);
    for (int k : orb) {
      inv_sum = vadd(inv_sum, rd.simple_coroots[k]);
      root_sum = vadd(root_sum, rd.simple_roots[k]);
    }
    lat.alpha_inv_sum.push_back(inv_sum);
    lat.orbit_root_sum.push_back(root_sum);

    // Longest element of the parabolic generated by the orbit: greedily
    // anti-sort the orbit's characteristic coweight.
    QVec v(n, Rational(0));
    {
      // Solve <alpha_j, v> = [j in orbit] as in minimal_coset_reps.
      std::set<int> inside(orb.begin(), orb.end());
      std::vector<QVec> m;
      QVec rhs;
      for (int j = 0; j < rd.ss; ++j) {
        QVec row(n);
        for (int t = 0; t < n; ++t) row[t] = Rational(rd.simple_roots[j][t]);
        m.push_back(row);
        rhs.push_back(Rational(inside.count(j) ? 1 : 0));
      }
      // Gaussian elimination with free variables set to zero.
      std::vector<int> pivot_col;
      int r = 0;
      for (int c = 0; c < n && r < static_cast<int>(m.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
          if (!m[i][c].is_zero()) {
            p = i;
            break;
          }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
          if (i == r || m[i][c].is_zero()) continue;
          const Rational f = m[i][c] / m[r][c];
          for (int t = c; t < n; ++t) m[i][t] -= f * m[r][t];
          rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
      }
      for (int i = r; i < static_cast<int>(m.size()); ++i)
        if (!rhs[i].is_zero())
          throw std::logic_error("coinvariants: inconsistent orbit system");
      for (int i = 0; i < r; ++i) v[pivot_col[i]] = rhs[i] / m[i][pivot_col[i]];
    }

    WeylWord w;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int j : orb) {
        if (dotq(rd.simple_roots[j], v) > Rational(0)) {
          v = reflect_vec(rd, j, v);
          w.letters.insert(w.letters.begin(), j);
          moved = true;
          break;
        }
      }
    }
    lat.rel_reflection.push_back(w);
    IntMat wm = word_matrix(rd, w);
    // The relative reflection commutes with sigma.
    if (mat_mul(wm, twist.sigma) != mat_mul(twist.sigma, wm))
      throw std::logic_error("coinvariants: relative reflection does not commute with sigma");
    lat.rel_reflection_mat.push_back(std::move(wm));
  }

  return lat;
}

CoinvariantClass project_to_coinvariants(const CoinvariantLattice& lat, const Vec& v) {
  auto [f, t] = lat.coker.classify(v);
  return CoinvariantClass{std::move(f), std::move(t)};
}

Vec class_lift(const CoinvariantLattice& lat, const CoinvariantClass& c) {
  return lat.coker.lift(c.free, c.torsion);
}

CoinvariantClass class_add(const CoinvariantLattice& lat, const CoinvariantClass& a,
                           const CoinvariantClass& b) {
  CoinvariantClass out;
  out.free = vadd(a.free, b.free);
  const auto orders = lat.coker.torsion_orders();
  out.torsion.resize(orders.size());
  for (size_t i = 0; i < orders.size(); ++i)
    out.torsion[i] = (a.torsion[i] + b.torsion[i]) % orders[i];
  return out;
}

CoinvariantClass class_sub(const CoinvariantLattice& lat, const CoinvariantClass& a,
                           const CoinvariantClass& b) {
  CoinvariantClass out;
  out.free = vsub(a.free, b.free);
  const auto orders = lat.coker.torsion_orders();
  out.torsion.resize(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) {
    long long r = (a.torsion[i] - b.torsion[i]) % orders[i];
    if (r < 0) r += orders[i];
    out.torsion[i] = r;
  }
  return out;
}

CoinvariantClass class_scale(const CoinvariantLattice& lat, long long m,
                             const CoinvariantClass& a) {
  CoinvariantClass out;
  out.free = vscale(m, a.free);
  const auto orders = lat.coker.torsion_orders();
  out.torsion.resize(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) {
    long long r = (m * a.torsion[i]) % orders[i];
    if (r < 0) r += orders[i];
    out.torsion[i] = r;
  }
  return out;
}

bool class_is_zero(const CoinvariantClass& c) {
  for (long long x : c.free)
    if (x != 0) return false;
  for (long long x : c.torsion)
    if (x != 0) return false;
  return true;
}

long long coinvariant_pairing(const CoinvariantLattice& lat, const Vec& f,
                              const CoinvariantClass& c) {
  // Well-defined only for Gamma-invariant functionals.
  assert(mat_vec(lat.sigma_fun, f) == f && "pairing functional must be Gamma-invariant");
  return dot(f, class_lift(lat, c));
}

bool is_dominant_coinvariant(const CoinvariantLattice& lat, const CoinvariantClass& c) {
  const Vec lift = class_lift(lat, c);
  for (const Vec& fs : lat.orbit_root_sum)
    if (dot(fs, lift) < 0) return false;
  return true;
}

bool coinvariant_leq(const CoinvariantLattice& lat, const CoinvariantClass& a,
                     const CoinvariantClass& b) {
  const CoinvariantClass diff = class_sub(lat, b, a);
  // Every candidate expansion must account for the full 2rho-height of
  // diff, and each alpha_O contributes a fixed positive amount, so the
  // search space is finite.
  const Vec lift = class_lift(lat, diff);
  long long total2 = dot(lat.rd.two_rho_hat, lift);
  if (total2 < 0 || total2 % 2 != 0) return false;

  std::vector<long long> h;  // half-heights of the alpha_O
  for (size_t o = 0; o < lat.orbits.size(); ++o) {
    long long v = dot(lat.rd.two_rho_hat, class_lift(lat, lat.alpha[o]));
    assert(v > 0 && v % 2 == 0);
    h.push_back(v / 2);
  }
  const long long target = total2 / 2;
  const int k = static_cast<int>(h.size());

  // Depth-first over coefficient vectors with the height budget as a hard
  // wall; exact class arithmetic decides acceptance.
  std::vector<long long> coeff(k, 0);
  std::function<bool(int, long long)> go = [&](int idx, long long rem) -> bool {
    if (idx == k) {
      if (rem != 0) return false;
      CoinvariantClass acc{vzero(static_cast<int>(diff.free.size())),
                           Vec(diff.torsion.size(), 0)};
      for (int o = 0; o < k; ++o)
        acc = class_add(lat, acc, class_scale(lat, coeff[o], lat.alpha[o]));
      return acc == diff;
    }
    for (long long c = 0; c * h[idx] <= rem; ++c) {
      coeff[idx] = c;
      if (go(idx + 1, rem - c * h[idx])) return true;
    }
    coeff[idx] = 0;
    return false;
  };
  return go(0, target);
}

CoinvariantClass relative_reflect(const CoinvariantLattice& lat, int o,
                                  const CoinvariantClass& c) {
  const Vec lift = class_lift(lat, c);
  return project_to_coinvariants(lat, mat_vec(lat.rel_reflection_mat[o], lift));
}

namespace {

RelativeSort relative_sort(const CoinvariantLattice& lat, CoinvariantClass c, int sgn) {
  RelativeSort out;
  out.word = WeylWord{};
  bool moved = true;
  while (moved) {
    moved = false;
    Vec lift = class_lift(lat, c);
    for (size_t o = 0; o < lat.orbits.size(); ++o) {
      if (sgn * dot(lat.orbit_root_sum[o], lift) < 0) {
        c = relative_reflect(lat, static_cast<int>(o), c);
        out.word = word_concat(lat.rel_reflection[o], out.word);
        out.rel_letters.insert(out.rel_letters.begin(), static_cast<int>(o));
        moved = true;
        break;
      }
    }
  }
  out.cls = std::move(c);
  return out;
}

}  // namespace

RelativeSort relative_dominant_representative(const CoinvariantLattice& lat,
                                              CoinvariantClass c) {
  return relative_sort(lat, std::move(c), +1);
}

RelativeSort relative_antidominant_representative(const CoinvariantLattice& lat,
                                                  CoinvariantClass c) {
  return relative_sort(lat, std::move(c), -1);
}

std::vector<RelativeWeylElement> relative_weyl_elements(const CoinvariantLattice& lat,
                                                        long long cap) {
  std::vector<RelativeWeylElement> out;
  std::map<IntMat, int> seen;
  std::deque<int> queue;

  RelativeWeylElement id{identity_mat(lat.rd.rank), WeylWord{}, 0};
  seen[id.mat] = 0;
  out.push_back(id);
  queue.push_back(0);

  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (size_t o = 0; o < lat.orbits.size(); ++o) {
      IntMat next = mat_mul(lat.rel_reflection_mat[o], out[cur].mat);
      if (seen.count(next)) continue;
      if (static_cast<long long>(out.size()) >= cap)
        throw std::runtime_error("relative_weyl_elements: group size exceeds cap");
      RelativeWeylElement e;
      e.word = word_concat(lat.rel_reflection[o], out[cur].word);
      e.rel_len = out[cur].rel_len + 1;
      e.mat = next;
      seen[next] = static_cast<int>(out.size());
      queue.push_back(static_cast<int>(out.size()));
      out.push_back(std::move(e));
    }
  }
  return out;
}

QVec galois_average(const CoinvariantLattice& lat, const Vec& v) {
  Vec acc = galois_norm(lat, v);
  QVec out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i)
    out[i] = Rational(acc[i], lat.twist.order);
  return out;
}

Vec galois_norm(const CoinvariantLattice& lat, const Vec& v) {
  Vec acc = vzero(static_cast<int>(v.size()));
  Vec cur = v;
  for (int j = 0; j < lat.twist.order; ++j) {
    acc = vadd(acc, cur);
    cur = mat_vec(lat.twist.sigma, cur);
  }
  return acc;
}

}  // namespace kottwitz
