#include "kottwitz/kottwitz.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace kottwitz {

Cokernel pi1_cokernel(const CoinvariantLattice& lat) {
  const int n = lat.rd.rank;
  IntMat cols(n, Vec{});
  for (int i = 0; i < n; ++i) cols[i].reserve(lat.rd.ss + n);
  for (const Vec& cv : lat.rd.simple_coroots)
    for (int i = 0; i < n; ++i) cols[i].push_back(cv[i]);
  const IntMat sm1 = mat_sub(lat.twist.sigma, identity_mat(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) cols[i].push_back(sm1[i][j]);
  return cokernel_of_columns(cols);
}

KappaClass kappa_class(const CoinvariantLattice& lat, const Cokernel& pi1, const Vec& lift) {
  (void)lat;
  auto [f, t] = pi1.classify(lift);
  return KappaClass{std::move(f), std::move(t)};
}

KottwitzPoint unramified_point(const CoinvariantLattice& lat, const CoinvariantClass& c) {
  KottwitzPoint pt;
  pt.cls = relative_dominant_representative(lat, c).cls;

  const Vec lift = class_lift(lat, pt.cls);
  pt.slope = galois_average(lat, lift);
  assert(is_dominant(lat.rd, pt.slope) &&
         "invariant relative-dominant slope must be absolutely dominant");

  const Cokernel pi1 = pi1_cokernel(lat);
  pt.kappa = kappa_class(lat, pi1, lift);

  for (size_t o = 0; o < lat.orbits.size(); ++o)
    if (dotq(lat.orbit_root_sum[o], pt.slope).is_zero())
      pt.levi.push_back(static_cast<int>(o));

  pt.hn_reduction = relative_antidominant_representative(lat, pt.cls).cls;

  // Minimal coset representatives for W_rel / W_levi: breadth-first
  // closure on the integer-scaled slope vector, whose stabilizer is
  // exactly the Levi parabolic.
  const Vec x0 = galois_norm(lat, lift);
  std::map<Vec, int> seen;
  std::deque<int> queue;
  pt.coset_reps.push_back(WeylWord{});
  pt.coset_rep_mats.push_back(identity_mat(lat.rd.rank));
  pt.coset_rep_rel_len.push_back(0);
  seen[x0] = 0;
  queue.push_back(0);
  std::vector<Vec> vertex{x0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (size_t o = 0; o < lat.orbits.size(); ++o) {
      Vec next = mat_vec(lat.rel_reflection_mat[o], vertex[cur]);
      if (seen.count(next)) continue;
      const int idx = static_cast<int>(pt.coset_reps.size());
      pt.coset_reps.push_back(word_concat(lat.rel_reflection[o], pt.coset_reps[cur]));
      pt.coset_rep_mats.push_back(mat_mul(lat.rel_reflection_mat[o], pt.coset_rep_mats[cur]));
      pt.coset_rep_rel_len.push_back(pt.coset_rep_rel_len[cur] + 1);
      seen[next] = idx;
      vertex.push_back(std::move(next));
      queue.push_back(idx);
    }
  }
  return pt;
}

namespace {

bool point_order(const CoinvariantLattice& lat, const KottwitzPoint& a, const KottwitzPoint& b) {
  const long long ha = component_dimension(lat, a.cls);
  const long long hb = component_dimension(lat, b.cls);
  if (ha != hb) return ha > hb;
  return a.cls < b.cls;
}

}  // namespace

std::vector<KottwitzPoint> enumerate_bgmu_un(const CoinvariantLattice& lat, const Vec& mu) {
  if (!is_dominant(lat.rd, mu))
    throw std::invalid_argument("enumerate_bgmu_un: mu must be dominant");

  const CoinvariantClass mu_cls = project_to_coinvariants(lat, mu);
  const long long total2 = dot(lat.rd.two_rho_hat, mu);
  assert(total2 >= 0);

  std::vector<long long> h;
  for (size_t o = 0; o < lat.orbits.size(); ++o) {
    const long long v = dot(lat.rd.two_rho_hat, class_lift(lat, lat.alpha[o]));
    assert(v > 0 && v % 2 == 0);
    h.push_back(v / 2);
  }
  const long long budget = total2 / 2;
  const int k = static_cast<int>(h.size());

  std::set<CoinvariantClass> found;
  std::vector<long long> coeff(k, 0);
  std::function<void(int, long long)> go = [&](int idx, long long rem) {
    if (idx == k) {
      CoinvariantClass cand = mu_cls;
      for (int o = 0; o < k; ++o)
        cand = class_sub(lat, cand, class_scale(lat, coeff[o], lat.alpha[o]));
      if (is_dominant_coinvariant(lat, cand)) found.insert(cand);
      return;
    }
    for (long long c = 0; c * h[idx] <= rem; ++c) {
      coeff[idx] = c;
      go(idx + 1, rem - c * h[idx]);
    }
    coeff[idx] = 0;
  };
  go(0, budget);

  std::vector<KottwitzPoint> out;
  out.reserve(found.size());
  for (const auto& cls : found) out.push_back(unramified_point(lat, cls));
  std::sort(out.begin(), out.end(),
            [&](const KottwitzPoint& a, const KottwitzPoint& b) { return point_order(lat, a, b); });
  assert(!out.empty() && out.front().cls == mu_cls);
  return out;
}

std::pair<KottwitzPoint, KappaClass> mu_ordinary_and_basic(const CoinvariantLattice& lat,
                                                           const Vec& mu) {
  if (!is_dominant(lat.rd, mu))
    throw std::invalid_argument("mu_ordinary_and_basic: mu must be dominant");
  KottwitzPoint ordinary = unramified_point(lat, project_to_coinvariants(lat, mu));
  const Cokernel pi1 = pi1_cokernel(lat);
  return {std::move(ordinary), kappa_class(lat, pi1, mu)};
}

long long component_dimension(const CoinvariantLattice& lat, const CoinvariantClass& c) {
  return dot(lat.rd.two_rho_hat, class_lift(lat, c));
}

bool polygon_is_integral(const Polygon& p) {
  for (const Rational& s : p)
    if (!s.is_integer()) return false;
  return true;
}

std::vector<Polygon> bgmu_gln(int n, const Vec& mu) {
  if (n < 1) throw std::invalid_argument("bgmu_gln: n must be positive");
  if (static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("bgmu_gln: mu has wrong length");
  for (int i = 0; i + 1 < n; ++i)
    if (mu[i] < mu[i + 1]) throw std::invalid_argument("bgmu_gln: mu must be weakly decreasing");

  // Hodge partial sums H[j] = mu_1 + ... + mu_j.
  std::vector<long long> H(n + 1, 0);
  for (int j = 0; j < n; ++j) H[j + 1] = H[j] + mu[j];
  const long long total = H[n];

  std::vector<Polygon> out;
  Polygon current;

  // Build polygons segment by segment: each segment has length m, slope
  // t/m with integral t, slopes strictly decrease across segments, every
  // integer point stays weakly below the Hodge polygon, endpoints match.
  std::function<void(int, long long, bool, Rational)> go =
      [&](int i, long long cum, bool first, Rational prev) {
        if (i == n) {
          if (cum == total) out.push_back(current);
          return;
        }
        for (int m = 1; i + m <= n; ++m) {
          // t must satisfy cum + (t/m)*j <= H[i+j] for j = 1..m.
          long long t_hi = std::numeric_limits<long long>::max();
          for (int j = 1; j <= m; ++j) {
            // floor(m*(H[i+j]-cum)/j)
            const long long num = static_cast<long long>(m) * (H[i + j] - cum);
            long long f = num / j;
            if (num % j != 0 && num < 0) --f;
            t_hi = std::min(t_hi, f);
          }
          const int rest = n - i - m;
          for (long long t = t_hi; ; --t) {
            const Rational s(t, m);
            if (!first && !(s < prev)) continue;
            if (rest == 0) {
              if (cum + t != total) {
                if (cum + t < total) break;
                continue;
              }
            } else {
              // Remaining average slope must be strictly below s.
              // (total - cum - t) / rest < t / m
              if (!(Rational(total - cum - t, rest) < s)) break;
            }
            for (int j = 0; j < m; ++j) current.push_back(s);
            go(i + m, cum + t, false, s);
            for (int j = 0; j < m; ++j) current.pop_back();
            if (rest == 0) break;
          }
        }
      };
  go(0, 0, true, Rational(0));

  std::sort(out.begin(), out.end(), [](const Polygon& a, const Polygon& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return b[i] < a[i];
    }
    return false;
  });
  return out;
}

ModulusParts modulus_decomposition(const CoinvariantLattice& lat, const WeylWord& w,
                                   const KottwitzPoint& pt) {
  const RootDatum& rd = lat.rd;
  // Precondition: w is minimal length in its coset modulo the Levi, i.e.
  // it keeps every simple root of the Levi positive.
  for (int o : pt.levi)
    for (int i : lat.orbits[o]) {
      const Vec img = apply_word_fun(rd, w, rd.simple_roots[i]);
      if (!rd.is_positive_root(img))
        throw std::invalid_argument(
            "modulus_decomposition: w is not a minimal-length representative");
    }

  ModulusParts parts{vzero(rd.rank), vzero(rd.rank), vzero(rd.rank)};
  for (const Vec& root : rd.pos_roots) {
    const Vec img = apply_word_fun(rd, w, root);
    if (dotq(root, pt.slope).is_zero()) {
      parts.zero = vadd(parts.zero, img);
    } else if (rd.is_positive_root(img)) {
      parts.pos = vadd(parts.pos, img);
    } else {
      parts.neg = vadd(parts.neg, img);
    }
  }
  return parts;
}

}  // namespace kottwitz
