#include "kottwitz/averaging.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace kottwitz {

namespace {

// Half-sum of the positive roots outside the Levi of pt, as a rational
// functional.
QVec rho_p(const CoinvariantLattice& lat, const KottwitzPoint& pt) {
  QVec acc(lat.rd.rank, Rational(0));
  for (const Vec& root : lat.rd.pos_roots) {
    if (dotq(root, pt.slope).is_zero()) continue;
    for (int i = 0; i < lat.rd.rank; ++i) acc[i] += Rational(root[i], 2);
  }
  return acc;
}

}  // namespace

ReductionDatum red_b_phi(const CoinvariantLattice& lat, const KottwitzPoint& pt,
                         const UnramifiedCharacter& chi) {
  ReductionDatum out;
  out.point = pt;

  const QVec rp = rho_p(lat, pt);
  const long long shift = -component_dimension(lat, pt.cls);

  for (size_t wi = 0; wi < pt.coset_reps.size(); ++wi) {
    RedSummand s;
    s.w = pt.coset_reps[wi];
    s.rel_len = pt.coset_rep_rel_len[wi];
    s.shift = shift;
    const WeylWord winv = word_inverse(s.w);
    for (const Vec& v : lat.inv_basis) {
      s.chi_w.push_back(evaluate(lat, chi, apply_word(lat.rd, winv, v)));
      s.delta_p_half_exp.push_back(-dotq(rp, to_q(v)));
    }
    out.summands.push_back(std::move(s));
  }
  return out;
}

WeilCharacterMultiset predicted_weil_summand(const WeightSystem& ws,
                                             const CoinvariantLattice& lat,
                                             const KottwitzPoint& pt, int w_index,
                                             const UnramifiedCharacter& phi) {
  if (w_index < 0 || w_index >= static_cast<int>(pt.coset_reps.size()))
    throw std::invalid_argument("predicted_weil_summand: w is not a stored representative");

  // Act on the relative-dominant class: its stabilizer is exactly the Levi
  // subgroup the representatives are cosets of, so the targets enumerate the
  // fiber of classes over this point without repeats or gaps.
  const Vec dom_lift = class_lift(lat, pt.cls);
  const CoinvariantClass target =
      project_to_coinvariants(lat, mat_vec(pt.coset_rep_mats[w_index], dom_lift));
  const long long shift = -component_dimension(lat, pt.cls);

  std::map<CharacterValue, long long> merged;
  for (const auto& [weight, mult] : ws.mults) {
    if (project_to_coinvariants(lat, weight) != target) continue;
    merged[evaluate(lat, phi, galois_norm(lat, weight))] += mult;
  }
  WeilCharacterMultiset out;
  for (const auto& [value, mult] : merged) out.push_back(WeilEntry{value, mult, shift});
  return out;
}

AveragingReport refined_averaging_check(const CoinvariantLattice& lat, const Vec& mu,
                                        const UnramifiedCharacter& phi, long long cap) {
  AveragingReport report;
  const WeightSystem ws = freudenthal(lat.rd, mu, cap);
  report.dim = ws.dim;

  for (const auto& [weight, mult] : ws.mults)
    report.rhs[evaluate(lat, phi, galois_norm(lat, weight))] += mult;

  const std::vector<KottwitzPoint> points = enumerate_bgmu_un(lat, mu);
  for (const KottwitzPoint& pt : points) {
    AveragingBlock block;
    block.point = pt;
    block.shift = -component_dimension(lat, pt.cls);
    const Vec dom_lift = class_lift(lat, pt.cls);
    for (size_t wi = 0; wi < pt.coset_reps.size(); ++wi) {
      AveragingBlockSummand s;
      s.w = pt.coset_reps[wi];
      s.target = project_to_coinvariants(lat, mat_vec(pt.coset_rep_mats[wi], dom_lift));
      s.entries = predicted_weil_summand(ws, lat, pt, static_cast<int>(wi), phi);
      for (const WeilEntry& e : s.entries) {
        report.lhs[e.value] += e.mult;
        report.total_mult += e.mult;
      }
      block.summands.push_back(std::move(s));
    }
    report.blocks.push_back(std::move(block));
  }

  report.pass = report.lhs == report.rhs && report.total_mult == report.dim;
  if (report.pass) {
    report.detail = "eigenvalue multisets agree and total multiplicity equals dim";
  } else {
    std::ostringstream os;
    os << "mismatch: total predicted " << report.total_mult << " vs dim " << report.dim << ";";
    for (const auto& [value, mult] : report.lhs) {
      const auto it = report.rhs.find(value);
      const long long want = it == report.rhs.end() ? 0 : it->second;
      if (mult != want) os << " [" << value.str() << ": " << mult << " vs " << want << "]";
    }
    for (const auto& [value, mult] : report.rhs)
      if (!report.lhs.count(value)) os << " [" << value.str() << ": 0 vs " << mult << "]";
    report.detail = os.str();
  }
  return report;
}

WeilCharacterMultiset quasi_minuscule_basic_contribution(const CoinvariantLattice& lat,
                                                         const Vec& mu,
                                                         const UnramifiedCharacter& phi,
                                                         long long cap) {
  const WeightSystem ws = freudenthal(lat.rd, mu, cap);
  const std::vector<KottwitzPoint> points = weight_orbits_to_kottwitz(ws, lat);
  if (points.size() != 2)
    throw std::invalid_argument(
        "quasi_minuscule_basic_contribution: weight classes are not {ordinary, central}");
  const KottwitzPoint& central = points[1];
  if (central.levi.size() != lat.orbits.size())
    throw std::invalid_argument(
        "quasi_minuscule_basic_contribution: second weight class is not central");
  assert(central.coset_reps.size() == 1);
  return predicted_weil_summand(ws, lat, central, 0, phi);
}

std::vector<std::vector<CharacterValue>> geometric_lemma_red_triv(const CoinvariantLattice& lat,
                                                                  const KottwitzPoint& pt,
                                                                  const UnramifiedCharacter& chi,
                                                                  long long cap) {
  const std::vector<RelativeWeylElement> relw = relative_weyl_elements(lat, cap);
  const Vec x0 = galois_norm(lat, class_lift(lat, pt.cls));

  // Group the full relative Weyl group into cosets modulo the stabilizer
  // of the slope; BFS order guarantees the first element seen per coset is
  // a shortest one.
  std::map<Vec, const RelativeWeylElement*> cosets;
  for (const RelativeWeylElement& w : relw) {
    const Vec key = mat_vec(w.mat, x0);
    if (!cosets.count(key)) cosets[key] = &w;
  }

  const QVec rp = [&] {
    QVec acc(lat.rd.rank, Rational(0));
    for (const Vec& root : lat.rd.pos_roots) {
      if (dotq(root, pt.slope).is_zero()) continue;
      for (int i = 0; i < lat.rd.rank; ++i) acc[i] += Rational(root[i], 2);
    }
    return acc;
  }();

  std::vector<std::vector<CharacterValue>> out;
  for (const auto& [key, w] : cosets) {
    const WeylWord winv = word_inverse(w->word);
    std::vector<CharacterValue> tuple;
    for (const Vec& v : lat.inv_basis) {
      CharacterValue value = evaluate(lat, chi, apply_word(lat.rd, winv, v));
      value.k += -dotq(rp, to_q(v));
      tuple.push_back(value);
    }
    out.push_back(std::move(tuple));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kottwitz
