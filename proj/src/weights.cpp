#include "kottwitz/weights.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>

namespace kottwitz {

namespace {

// W-invariant symmetric form on the cocharacter space:
// B(x, y) = sum over positive roots of <alpha, x><alpha, y>.
Rational form_b(const RootDatum& rd, const QVec& x, const QVec& y) {
  Rational acc(0);
  for (const Vec& root : rd.pos_roots) acc += dotq(root, x) * dotq(root, y);
  return acc;
}

}  // namespace

long long weyl_dimension(const RootDatum& rd, const Vec& mu) {
  Rational num(1), den(1);
  const QVec shifted = qadd(to_q(mu), rd.rho_check);
  for (const Vec& root : rd.pos_roots) {
    num *= dotq(root, shifted);
    den *= dotq(root, rd.rho_check);
  }
  const Rational d = num / den;
  assert(d.is_integer() && d.sign() > 0);
  return d.to_integer();
}

WeightSystem freudenthal(const RootDatum& rd, const Vec& mu, long long cap) {
  if (!is_dominant(rd, mu)) throw std::invalid_argument("freudenthal: mu must be dominant");

  WeightSystem ws;
  ws.highest = mu;

  const long long total2 = dot(rd.two_rho_hat, mu);
  assert(total2 >= 0);

  // Every dominant lambda <= mu is a weight; enumerate mu minus
  // nonnegative combinations of simple coroots. Each subtraction lowers
  // <2rho, -> by exactly 2, so the coefficient sum is bounded by rho-height.
  std::vector<Vec> dominant_weights;
  {
    std::set<Vec> found;
    const int k = rd.ss;
    std::function<void(int, Vec, long long)> go = [&](int idx, Vec cur, long long rem) {
      if (idx == k) {
        if (is_dominant(rd, cur)) found.insert(cur);
        return;
      }
      for (long long c = 0; c <= rem; ++c) {
        go(idx + 1, cur, rem - c);
        cur = vsub(cur, rd.simple_coroots[idx]);
      }
    };
    go(0, mu, total2 / 2);
    dominant_weights.assign(found.begin(), found.end());
  }

  std::sort(dominant_weights.begin(), dominant_weights.end(), [&](const Vec& a, const Vec& b) {
    const long long ha = dot(rd.two_rho_hat, a);
    const long long hb = dot(rd.two_rho_hat, b);
    if (ha != hb) return ha > hb;
    return a < b;
  });
  assert(!dominant_weights.empty() && dominant_weights.front() == mu);

  const QVec mu_shift = qadd(to_q(mu), rd.rho_check);
  const Rational b_top = form_b(rd, mu_shift, mu_shift);

  std::map<Vec, long long> dom_mult;
  dom_mult[mu] = 1;
  for (size_t di = 1; di < dominant_weights.size(); ++di) {
    const Vec& lam = dominant_weights[di];
    Rational numer(0);
    for (size_t pi = 0; pi < rd.pos_coroots.size(); ++pi) {
      const Vec& coroot = rd.pos_coroots[pi];
      const long long step2 = dot(rd.two_rho_hat, coroot);
      long long height2 = dot(rd.two_rho_hat, lam);
      Vec cur = lam;
      for (long long k = 1;; ++k) {
        height2 += step2;
        if (height2 > total2) break;
        cur = vadd(cur, coroot);
        const Vec dom = dominant_representative(rd, cur).first;
        const auto it = dom_mult.find(dom);
        if (it == dom_mult.end()) continue;
        numer += Rational(it->second) * form_b(rd, to_q(cur), to_q(coroot));
      }
    }
    const QVec lam_shift = qadd(to_q(lam), rd.rho_check);
    const Rational denom = b_top - form_b(rd, lam_shift, lam_shift);
    assert(denom.sign() > 0);
    const Rational m = (Rational(2) * numer) / denom;
    assert(m.is_integer() && m.sign() > 0);
    dom_mult[lam] = m.to_integer();
  }

  long long count = 0;
  for (const auto& [lam, m] : dom_mult) {
    const std::set<Vec> orbit = weyl_orbit(rd, lam, cap);
    count += static_cast<long long>(orbit.size());
    if (count > cap) throw std::runtime_error("freudenthal: weight system exceeds cap");
    for (const Vec& w : orbit) {
      ws.mults[w] = m;
      ws.dim += m;
    }
  }
  return ws;
}

long long coinvariant_weight_space(const WeightSystem& ws, const CoinvariantLattice& lat,
                                   const CoinvariantClass& c) {
  long long acc = 0;
  for (const auto& [w, m] : ws.mults)
    if (project_to_coinvariants(lat, w) == c) acc += m;
  return acc;
}

MinusculeClass classify_minuscule(const RootDatum& rd, const Vec& mu) {
  if (!is_dominant(rd, mu)) throw std::invalid_argument("classify_minuscule: mu must be dominant");

  bool minuscule = true;
  for (const Vec& root : rd.pos_roots)
    if (dot(root, mu) > 1) {
      minuscule = false;
      break;
    }
  if (minuscule) return MinusculeClass::Minuscule;

  const WeightSystem ws = freudenthal(rd, mu);
  std::set<Vec> central, noncentral;
  for (const auto& [w, m] : ws.mults) {
    bool is_central = true;
    for (const Vec& root : rd.simple_roots)
      if (dot(root, w) != 0) {
        is_central = false;
        break;
      }
    (is_central ? central : noncentral).insert(w);
  }
  if (noncentral.empty()) return MinusculeClass::Neither;

  // The noncentral weights must be a single Weyl orbit whose dominant
  // representative is a (short) coroot.
  const Vec dom = dominant_representative(rd, *noncentral.begin()).first;
  const std::set<Vec> orbit = weyl_orbit(rd, dom);
  if (orbit != noncentral) return MinusculeClass::Neither;
  const bool is_coroot =
      std::find(rd.pos_coroots.begin(), rd.pos_coroots.end(), dom) != rd.pos_coroots.end();
  return is_coroot ? MinusculeClass::QuasiMinuscule : MinusculeClass::Neither;
}

std::vector<KottwitzPoint> weight_orbits_to_kottwitz(const WeightSystem& ws,
                                                     const CoinvariantLattice& lat) {
  std::set<CoinvariantClass> classes;
  for (const auto& [w, m] : ws.mults)
    classes.insert(relative_dominant_representative(lat, project_to_coinvariants(lat, w)).cls);

  std::vector<KottwitzPoint> out;
  out.reserve(classes.size());
  for (const auto& cls : classes) out.push_back(unramified_point(lat, cls));
  std::sort(out.begin(), out.end(), [&](const KottwitzPoint& a, const KottwitzPoint& b) {
    const long long ha = component_dimension(lat, a.cls);
    const long long hb = component_dimension(lat, b.cls);
    if (ha != hb) return ha > hb;
    return a.cls < b.cls;
  });
  return out;
}

}  // namespace kottwitz
