#include "kottwitz/characters.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kottwitz {

CharacterValue CharacterValue::pow(long long e) const {
  CharacterValue base = e < 0 ? inverse() : *this;
  long long n = e < 0 ? -e : e;
  CharacterValue acc = one();
  while (n > 0) {
    if (n & 1) acc = acc.times(base);
    base = base.times(base);
    n >>= 1;
  }
  return acc;
}

std::string CharacterValue::str() const {
  std::ostringstream os;
  if (k.is_zero()) {
    os << c.str();
  } else {
    if (c != Rational(1)) os << c.str() << "*";
    os << "q^" << k.str();
  }
  return os.str();
}

CharacterValue CharacterValue::parse(const std::string& s) {
  std::string text = s;
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  if (text.empty()) throw std::invalid_argument("character value: empty");

  CharacterValue out{Rational(1), Rational(0)};
  const auto star = text.find('*');
  std::string c_part, q_part;
  if (star != std::string::npos) {
    c_part = text.substr(0, star);
    q_part = text.substr(star + 1);
  } else if (text[0] == 'q') {
    q_part = text;
  } else {
    c_part = text;
  }
  if (!c_part.empty()) out.c = Rational::parse(c_part);
  if (!q_part.empty()) {
    if (q_part == "q") {
      out.k = Rational(1);
    } else if (q_part.rfind("q^", 0) == 0) {
      out.k = Rational::parse(q_part.substr(2));
      if (!out.k.is_integer())
        throw std::invalid_argument("character value: exponent must be an integer");
    } else {
      throw std::invalid_argument("character value: bad q-part '" + q_part + "'");
    }
  }
  if (out.c.is_zero()) throw std::invalid_argument("character value: c must be nonzero");
  return out;
}

CharacterValue evaluate(const CoinvariantLattice& lat, const UnramifiedCharacter& chi,
                        const Vec& v) {
  const int n = lat.rd.rank;
  const int m = static_cast<int>(lat.inv_basis.size());
  if (static_cast<int>(chi.values.size()) != m)
    throw std::invalid_argument("evaluate: character has wrong number of values");

  // Solve sum c_i * basis_i = v; the kernel lattice is saturated, so the
  // coordinates are integers whenever v is invariant.
  std::vector<QVec> a(n, QVec(m + 1, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = Rational(lat.inv_basis[j][i]);
    a[i][m] = Rational(v[i]);
  }
  int r = 0;
  std::vector<int> pivot(m, -1);
  for (int c = 0; c < m && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c] / a[r][c];
      for (int t = c; t <= m; ++t) a[i][t] -= f * a[r][t];
    }
    pivot[c] = r;
    ++r;
  }
  std::vector<Rational> coord(m, Rational(0));
  for (int c = 0; c < m; ++c)
    if (pivot[c] >= 0) coord[c] = a[pivot[c]][m] / a[pivot[c]][c];
  for (int i = 0; i < n; ++i) {
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += coord[j] * Rational(lat.inv_basis[j][i]);
    if (acc != Rational(v[i]))
      throw std::invalid_argument("evaluate: vector is not in the invariant sublattice");
  }

  CharacterValue out = CharacterValue::one();
  for (int j = 0; j < m; ++j) {
    if (!coord[j].is_integer())
      throw std::logic_error("evaluate: non-integral coordinates on a saturated lattice");
    out = out.times(chi.values[j].pow(coord[j].to_integer()));
  }
  return out;
}

CharacterValue delta_b_half(const CoinvariantLattice& lat, const Vec& v) {
  return CharacterValue{Rational(1), -dotq(lat.rd.rho_hat, to_q(v))};
}

std::pair<CharacterValue, int> orbit_test_value(const CoinvariantLattice& lat,
                                                const UnramifiedCharacter& chi, const Vec& v) {
  Vec sum = v;
  Vec cur = v;
  int f = 1;
  for (;;) {
    cur = mat_vec(lat.twist.sigma, cur);
    if (cur == v) break;
    sum = vadd(sum, cur);
    ++f;
    if (f > lat.twist.order)
      throw std::logic_error("orbit_test_value: orbit longer than the twist order");
  }
  return {evaluate(lat, chi, sum), f};
}

namespace {

bool in_forbidden_set(const CharacterValue& t, int f) {
  if (t.c != Rational(1)) return false;
  return t.k.is_zero() || t.k == Rational(f) || t.k == Rational(-f);
}

bool orbit_tests_pass(const CoinvariantLattice& lat, const UnramifiedCharacter& chi,
                      const std::vector<Vec>& vectors, bool squared) {
  std::set<Vec> seen;  // skip vectors already covered by an earlier orbit
  for (const Vec& v : vectors) {
    if (seen.count(v)) continue;
    Vec cur = v;
    do {
      seen.insert(cur);
      cur = mat_vec(lat.twist.sigma, cur);
    } while (cur != v);
    auto [t, f] = orbit_test_value(lat, chi, v);
    if (squared) t = t.times(t);
    if (in_forbidden_set(t, f)) return false;
  }
  return true;
}

}  // namespace

ConditionLadder condition_ladder(const CoinvariantLattice& lat, const UnramifiedCharacter& chi,
                                 long long cap) {
  ConditionLadder out;

  std::vector<Vec> simple(lat.rd.simple_coroots.begin(), lat.rd.simple_coroots.end());
  std::vector<Vec> all(lat.rd.pos_coroots.begin(), lat.rd.pos_coroots.end());
  out.weakly_generic = orbit_tests_pass(lat, chi, simple, false);
  out.generic = orbit_tests_pass(lat, chi, all, false);
  out.cond4 = orbit_tests_pass(lat, chi, all, true);

  const std::vector<RelativeWeylElement> relw = relative_weyl_elements(lat, cap);

  // Condition on twisted isomorphy: no relative w may carry chi*delta^{1/2}
  // to chi*delta^{-1/2}. Vacuous for a torus.
  if (lat.rd.pos_roots.empty()) {
    out.cond3 = true;
  } else {
    out.cond3 = true;
    for (const RelativeWeylElement& w : relw) {
      const WeylWord winv = word_inverse(w.word);
      bool equal = true;
      for (const Vec& v : lat.inv_basis) {
        const CharacterValue lhs = evaluate(lat, chi, v).times(delta_b_half(lat, v));
        const Vec vw = apply_word(lat.rd, winv, v);
        const CharacterValue rhs =
            evaluate(lat, chi, vw).times(delta_b_half(lat, vw).inverse());
        if (lhs != rhs) {
          equal = false;
          break;
        }
      }
      if (equal) {
        out.cond3 = false;
        break;
      }
    }
  }

  out.regular = true;
  for (const RelativeWeylElement& w : relw) {
    if (w.rel_len == 0) continue;
    const WeylWord winv = word_inverse(w.word);
    bool equal = true;
    for (const Vec& v : lat.inv_basis) {
      if (evaluate(lat, chi, v) != evaluate(lat, chi, apply_word(lat.rd, winv, v))) {
        equal = false;
        break;
      }
    }
    if (equal) {
      out.regular = false;
      break;
    }
  }

  out.weakly_normalized_regular = out.generic && out.cond3;
  out.normalized_regular = out.generic && out.cond3 && out.cond4;
  return out;
}

namespace {

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

bool strong_pairs_pass(const CoinvariantLattice& lat, const UnramifiedCharacter& chi,
                       const WeightSystem& ws, std::string* witness) {
  std::vector<Vec> weights;
  weights.reserve(ws.mults.size());
  for (const auto& [w, m] : ws.mults) weights.push_back(w);
  for (size_t i = 0; i < weights.size(); ++i)
    for (size_t j = i + 1; j < weights.size(); ++j) {
      const Vec diff = vsub(weights[i], weights[j]);
      auto [t, f] = orbit_test_value(lat, chi, diff);
      if (in_forbidden_set(t, f)) {
        if (witness)
          *witness = "failing weight pair (" + vec_to_string(weights[i]) + ") vs (" +
                     vec_to_string(weights[j]) + "): test value " + t.str() + " with f=" +
                     std::to_string(f);
        return false;
      }
    }
  return true;
}

bool is_central_cochar(const RootDatum& rd, const Vec& v) {
  for (const Vec& root : rd.simple_roots)
    if (dot(root, v) != 0) return false;
  return true;
}

}  // namespace

MuRegularityReport mu_regularity(const CoinvariantLattice& lat, const UnramifiedCharacter& chi,
                                 const Vec& mu, MuRegMode mode,
                                 const std::vector<Vec>* supplied_pieces, long long cap) {
  if (!is_dominant(lat.rd, mu)) throw std::invalid_argument("mu_regularity: mu must be dominant");

  MuRegularityReport out;
  if (mode == MuRegMode::Strong) {
    const WeightSystem ws = freudenthal(lat.rd, mu, cap);
    std::string w;
    out.holds = strong_pairs_pass(lat, chi, ws, &w);
    out.witness = out.holds ? "all weight-pair orbit tests passed" : w;
    return out;
  }

  std::vector<Vec> pieces;
  if (supplied_pieces) {
    pieces = *supplied_pieces;
    Vec rem = mu;
    for (const Vec& p : pieces) {
      if (!is_dominant(lat.rd, p) || classify_minuscule(lat.rd, p) == MinusculeClass::Neither)
        throw std::invalid_argument("mu_regularity: supplied piece is not (quasi-)minuscule");
      rem = vsub(rem, p);
    }
    if (!is_central_cochar(lat.rd, rem))
      throw std::invalid_argument("mu_regularity: supplied pieces do not sum to mu modulo center");
  } else {
    // Candidate generators: fundamental coweights and dominant coroot
    // representatives that classify as minuscule or quasi-minuscule.
    std::set<Vec> cand_set;
    for (int i = 0; i < lat.rd.ss; ++i) {
      Vec w = vzero(lat.rd.rank);
      // In the adjoint realization the fundamental coweights are the basis;
      // in GL_n coordinates they are partial sums of e_i.
      if (lat.rd.type_tag.rfind("GL", 0) == 0) {
        for (int j = 0; j <= i; ++j) w[j] = 1;
      } else {
        w[i] = 1;
      }
      if (is_dominant(lat.rd, w)) cand_set.insert(w);
    }
    for (const Vec& cv : lat.rd.pos_coroots) cand_set.insert(dominant_representative(lat.rd, cv).first);
    std::vector<Vec> cands;
    for (const Vec& v : cand_set)
      if (v != vzero(lat.rd.rank) && classify_minuscule(lat.rd, v) != MinusculeClass::Neither)
        cands.push_back(v);
    std::sort(cands.begin(), cands.end(), [&](const Vec& a, const Vec& b) {
      return dot(lat.rd.two_rho_hat, a) > dot(lat.rd.two_rho_hat, b);
    });

    Vec rem = mu;
    bool progress = true;
    while (!is_central_cochar(lat.rd, rem) && progress) {
      progress = false;
      for (const Vec& g : cands) {
        const Vec next = vsub(rem, g);
        if (is_dominant(lat.rd, next)) {
          pieces.push_back(g);
          rem = next;
          progress = true;
          break;
        }
      }
    }
    if (!is_central_cochar(lat.rd, rem))
      throw std::invalid_argument(
          "mu_regularity: no minuscule/quasi-minuscule decomposition found; supply one");
  }

  std::set<Vec> distinct(pieces.begin(), pieces.end());
  std::ostringstream desc;
  desc << "decomposition:";
  for (const Vec& p : pieces) desc << " (" << vec_to_string(p) << ")";
  for (const Vec& p : distinct) {
    const WeightSystem ws = freudenthal(lat.rd, p, cap);
    std::string w;
    if (!strong_pairs_pass(lat, chi, ws, &w)) {
      out.holds = false;
      out.witness = desc.str() + "; piece (" + vec_to_string(p) + "): " + w;
      return out;
    }
  }
  out.holds = true;
  out.witness = desc.str();
  return out;
}

bool gln_principal_series_irreducible(const CoinvariantLattice& lat,
                                      const UnramifiedCharacter& chi) {
  if (lat.rd.type_tag.rfind("GL", 0) != 0)
    throw std::invalid_argument("gln_principal_series_irreducible: group must be GL_n");
  if (lat.twist.order != 1)
    throw std::invalid_argument("gln_principal_series_irreducible: group must be split");
  const int n = lat.rd.rank;
  if (static_cast<int>(chi.values.size()) != n)
    throw std::invalid_argument("gln_principal_series_irreducible: wrong value count");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const CharacterValue ratio = chi.values[i].times(chi.values[j].inverse());
      if (ratio.c == Rational(1) && (ratio.k == Rational(1) || ratio.k == Rational(-1)))
        return false;
    }
  return true;
}

}  // namespace kottwitz
