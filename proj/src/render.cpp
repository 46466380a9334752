#include "kottwitz/render.hpp"

#include <algorithm>
#include <sstream>

namespace kottwitz {

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string qvec_str(const QVec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].str();
  }
  return os.str();
}

std::string class_str(const CoinvariantLattice& lat, const CoinvariantClass& c) {
  // Canonical lift in lattice coordinates; unambiguous because the lift
  // map is a fixed section of the projection.
  return vec_str(class_lift(lat, c));
}

std::string kappa_str(const KappaClass& k) {
  std::string out = vec_str(k.free);
  if (!k.torsion.empty()) {
    if (!out.empty()) out += "|";
    out += vec_str(k.torsion);
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string levi_str(const std::vector<int>& levi) {
  if (levi.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < levi.size(); ++i) {
    if (i) os << ",";
    os << levi[i];
  }
  return os.str();
}

std::string word_str(const WeylWord& w) {
  if (w.letters.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ".";
    os << "s" << w.letters[i];
  }
  return os.str();
}

ojson point_json(const CoinvariantLattice& lat, const KottwitzPoint& pt) {
  ojson j;
  j["class"] = class_str(lat, pt.cls);
  j["slope"] = qvec_str(pt.slope);
  j["kappa"] = kappa_str(pt.kappa);
  j["hn_reduction"] = class_str(lat, pt.hn_reduction);
  j["levi"] = pt.levi;
  j["coset_count"] = pt.coset_reps.size();
  j["height"] = component_dimension(lat, pt.cls);
  return j;
}

}  // namespace

ojson describe_doc(const GroupSpec& g, const CoinvariantLattice& lat) {
  ojson j;
  j["schema"] = "kottwitz.describe.v1";
  j["group"] = g.name;
  j["rank"] = lat.rd.rank;
  j["semisimple_rank"] = lat.rd.ss;
  j["positive_roots"] = lat.rd.pos_roots.size();
  j["twist_order"] = lat.twist.order;
  j["coinvariants"] = lat.display();
  j["free_rank"] = lat.free_rank();
  j["torsion"] = lat.torsion();
  ojson orbits = ojson::array();
  for (size_t o = 0; o < lat.orbits.size(); ++o) {
    ojson e;
    e["members"] = lat.orbits[o];
    e["alpha_class"] = class_str(lat, lat.alpha[o]);
    e["invariant_sum"] = vec_str(lat.alpha_inv_sum[o]);
    orbits.push_back(e);
  }
  j["coroot_orbits"] = orbits;
  ojson basis = ojson::array();
  for (const Vec& v : lat.inv_basis) basis.push_back(vec_str(v));
  j["invariant_basis"] = basis;
  return j;
}

ojson bgmu_doc(const GroupSpec& g, const CoinvariantLattice& lat, const Vec& mu,
               const std::vector<KottwitzPoint>& points, const std::vector<Polygon>* polygons) {
  ojson j;
  j["schema"] = "kottwitz.bgmu.v1";
  j["group"] = g.name;
  j["mu"] = vec_str(mu);
  ojson un = ojson::array();
  for (const KottwitzPoint& pt : points) un.push_back(point_json(lat, pt));
  j["unramified"] = un;
  if (polygons) {
    ojson polys = ojson::array();
    for (const Polygon& p : *polygons) {
      ojson e;
      e["slopes"] = qvec_str(p);
      e["integral"] = polygon_is_integral(p);
      polys.push_back(e);
    }
    j["polygons"] = polys;
  } else {
    j["note"] = "full B(G,mu) enumeration is only available for split GL_n; "
                "the table above lists the unramified part";
  }
  return j;
}

std::string bgmu_tsv(const CoinvariantLattice& lat, const std::vector<KottwitzPoint>& points,
                     const std::vector<Polygon>* polygons) {
  std::ostringstream os;
  if (polygons) {
    os << "polygon\tintegral\n";
    for (const Polygon& p : *polygons)
      os << qvec_str(p) << "\t" << (polygon_is_integral(p) ? "yes" : "no") << "\n";
    os << "\n";
  }
  os << "class\tslope\tkappa\tlevi\twb\theight\n";
  for (const KottwitzPoint& pt : points) {
    os << class_str(lat, pt.cls) << "\t" << qvec_str(pt.slope) << "\t" << kappa_str(pt.kappa)
       << "\t" << levi_str(pt.levi) << "\t" << pt.coset_reps.size() << "\t"
       << component_dimension(lat, pt.cls) << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::pair<Vec, long long>> sorted_weights(const RootDatum& rd,
                                                      const WeightSystem& ws) {
  std::vector<std::pair<Vec, long long>> rows(ws.mults.begin(), ws.mults.end());
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    const long long ha = dot(rd.two_rho_hat, a.first);
    const long long hb = dot(rd.two_rho_hat, b.first);
    if (ha != hb) return ha > hb;
    return a.first < b.first;
  });
  return rows;
}

}  // namespace

ojson weights_doc(const RootDatum& rd, const WeightSystem& ws, const CoinvariantLattice* lat) {
  ojson j;
  j["schema"] = "kottwitz.weights.v1";
  j["highest"] = vec_str(ws.highest);
  j["dim"] = ws.dim;
  ojson rows = ojson::array();
  for (const auto& [w, m] : sorted_weights(rd, ws)) {
    ojson e;
    e["weight"] = vec_str(w);
    e["mult"] = m;
    if (lat) e["class"] = class_str(*lat, project_to_coinvariants(*lat, w));
    rows.push_back(e);
  }
  j["weights"] = rows;
  if (lat) {
    ojson classes = ojson::array();
    for (const KottwitzPoint& pt : weight_orbits_to_kottwitz(ws, *lat)) {
      ojson e;
      e["class"] = class_str(*lat, pt.cls);
      e["dim"] = coinvariant_weight_space(ws, *lat, pt.cls);
      classes.push_back(e);
    }
    j["classes"] = classes;
  }
  return j;
}

std::string weights_tsv(const RootDatum& rd, const WeightSystem& ws,
                        const CoinvariantLattice* lat) {
  std::ostringstream os;
  if (lat) {
    os << "class\tdim\n";
    for (const KottwitzPoint& pt : weight_orbits_to_kottwitz(ws, *lat))
      os << class_str(*lat, pt.cls) << "\t" << coinvariant_weight_space(ws, *lat, pt.cls)
         << "\n";
    return os.str();
  }
  os << "weight\tmult\n";
  for (const auto& [w, m] : sorted_weights(rd, ws)) os << vec_str(w) << "\t" << m << "\n";
  return os.str();
}

ojson ladder_doc(const GroupSpec& g, const UnramifiedCharacter& chi, const ConditionLadder& l) {
  ojson j;
  j["schema"] = "kottwitz.ladder.v1";
  j["group"] = g.name;
  ojson vals = ojson::array();
  for (const CharacterValue& v : chi.values) vals.push_back(v.str());
  j["chi"] = vals;
  j["weakly_generic"] = l.weakly_generic;
  j["generic"] = l.generic;
  j["twisted_nonisomorphy"] = l.cond3;
  j["squared_test"] = l.cond4;
  j["weakly_normalized_regular"] = l.weakly_normalized_regular;
  j["normalized_regular"] = l.normalized_regular;
  j["regular"] = l.regular;
  return j;
}

ojson tilting_doc(const RootDatum& rd, const Vec& mu, long long ell, const JantzenSum& sum,
                  bool tilting) {
  ojson j;
  j["schema"] = "kottwitz.tilting.v1";
  j["type"] = rd.type_tag;
  j["mu"] = vec_str(mu);
  j["ell"] = ell;
  j["tilting"] = tilting;
  ojson terms = ojson::array();
  for (const auto& [lam, coeff] : sum.terms) {
    ojson e;
    e["lambda"] = vec_str(lam);
    e["coeff"] = coeff;
    terms.push_back(e);
  }
  j["nonvanishing_terms"] = terms;
  return j;
}

std::string tilting_table_tsv(const RootDatum& rd) {
  std::ostringstream os;
  for (int i = 0; i < rd.ss; ++i) {
    Vec mu = vzero(rd.rank);
    mu[i] = 1;
    const std::set<long long> primes = tilting_primes(rd, mu);
    os << "w" << (i + 1) << "\t";
    if (primes.empty()) {
      os << "-";
    } else {
      bool first = true;
      for (long long p : primes) {
        if (!first) os << ",";
        os << p;
        first = false;
      }
    }
    os << "\n";
  }
  return os.str();
}

ojson averaging_doc(const GroupSpec& g, const CoinvariantLattice& lat, const Vec& mu,
                    const AveragingReport& report) {
  ojson j;
  j["schema"] = "kottwitz.averaging.v1";
  j["group"] = g.name;
  j["mu"] = vec_str(mu);
  j["dim"] = report.dim;
  j["total_multiplicity"] = report.total_mult;
  j["verdict"] = report.pass ? "PASS" : "FAIL";
  j["note"] = "per-(b,w) eigenvalue assignment beyond the proven cases is conjectural; "
              "the verified statement is the global multiset identity";
  ojson blocks = ojson::array();
  for (const AveragingBlock& b : report.blocks) {
    ojson e;
    e["class"] = class_str(lat, b.point.cls);
    e["slope"] = qvec_str(b.point.slope);
    e["shift"] = b.shift;
    ojson summands = ojson::array();
    for (const AveragingBlockSummand& s : b.summands) {
      ojson se;
      se["w"] = word_str(s.w);
      se["target"] = class_str(lat, s.target);
      ojson entries = ojson::array();
      for (const WeilEntry& we : s.entries) {
        ojson ee;
        ee["value"] = we.value.str();
        ee["mult"] = we.mult;
        entries.push_back(ee);
      }
      se["eigenvalues"] = entries;
      summands.push_back(se);
    }
    e["summands"] = summands;
    blocks.push_back(e);
  }
  j["blocks"] = blocks;
  if (!report.pass) j["diff"] = report.detail;
  return j;
}

}  // namespace kottwitz
