#include "kottwitz/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace kottwitz {

namespace {

struct TypeInfo {
  char letter;
  int n;  // rank of the Dynkin type
};

TypeInfo parse_type(const std::string& spec) {
  if (spec.size() < 2) throw std::invalid_argument("unsupported group spec: " + spec);
  char c = spec[0];
  int n = 0;
  try {
    n = std::stoi(spec.substr(1));
  } catch (...) {
    throw std::invalid_argument("unsupported group spec: " + spec);
  }
  if (n <= 0) throw std::invalid_argument("rank must be positive: " + spec);
  switch (c) {
    case 'A':
      break;
    case 'B':
    case 'C':
      if (n < 2) throw std::invalid_argument(spec + ": rank must be >= 2");
      break;
    case 'D':
      if (n < 3) throw std::invalid_argument(spec + ": rank must be >= 3");
      break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument(spec + ": rank must be 6, 7 or 8");
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument(spec + ": rank must be 4");
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument(spec + ": rank must be 2");
      break;
    default:
      throw std::invalid_argument("unsupported group spec: " + spec);
  }
  return {c, n};
}

// Bourbaki Cartan matrices. E-series: chain 1-3-4-5-...-n with node 2
// attached to node 4.
IntMat cartan_matrix(char letter, int n) {
  IntMat a(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[1][2] = -2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

long long expected_positive_roots(char letter, int n) {
  switch (letter) {
    case 'A': return (long long)n * (n + 1) / 2;
    case 'B':
    case 'C': return (long long)n * n;
    case 'D': return (long long)n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

void generate_positive_system(RootDatum& rd) {
  // Track each positive root together with its coordinates in the simple
  // roots, so positivity is a sign check in any lattice realization.
  std::map<Vec, std::pair<Vec, Vec>> seen;  // root -> (coords, coroot)
  std::deque<std::pair<Vec, Vec>> work;     // (root, coords)
  std::map<Vec, Vec> coroot_of;
  for (int i = 0; i < rd.ss; ++i) {
    Vec coords(rd.ss, 0);
    coords[i] = 1;
    seen[rd.simple_roots[i]] = {coords, rd.simple_coroots[i]};
    work.push_back({rd.simple_roots[i], coords});
  }
  while (!work.empty()) {
    auto [root, coords] = work.front();
    work.pop_front();
    Vec coroot = seen.at(root).second;
    for (int i = 0; i < rd.ss; ++i) {
      long long c = dot(root, rd.simple_coroots[i]);
      Vec nroot = vsub(root, vscale(c, rd.simple_roots[i]));
      Vec ncoords = coords;
      ncoords[i] -= c;
      bool pos = std::all_of(ncoords.begin(), ncoords.end(), [](long long x) { return x >= 0; });
      if (!pos) continue;
      if (seen.count(nroot)) continue;
      long long c2 = dot(rd.simple_roots[i], coroot);
      Vec ncoroot = vsub(coroot, vscale(c2, rd.simple_coroots[i]));
      seen[nroot] = {ncoords, ncoroot};
      work.push_back({nroot, ncoords});
    }
  }
  for (auto& [root, data] : seen) {
    rd.pos_roots.push_back(root);
    rd.pos_coroots.push_back(data.second);
  }
}

void finish_root_datum(RootDatum& rd, long long expected_count) {
  for (int i = 0; i < rd.ss; ++i) {
    if (rd.cartan[i][i] != 2) throw std::invalid_argument("invalid Cartan matrix: diagonal");
    for (int j = 0; j < rd.ss; ++j) {
      if (i == j) continue;
      if (rd.cartan[i][j] > 0) throw std::invalid_argument("invalid Cartan matrix: off-diagonal");
      if ((rd.cartan[i][j] == 0) != (rd.cartan[j][i] == 0))
        throw std::invalid_argument("invalid Cartan matrix: zero pattern");
    }
  }
  generate_positive_system(rd);
  if (expected_count >= 0 && (long long)rd.pos_roots.size() != expected_count)
    throw std::logic_error(rd.type_tag + ": generated " + std::to_string(rd.pos_roots.size()) +
                           " positive roots, expected " + std::to_string(expected_count));
  rd.two_rho_hat.assign(rd.rank, 0);
  for (auto& r : rd.pos_roots) rd.two_rho_hat = vadd(rd.two_rho_hat, r);
  rd.rho_hat.assign(rd.rank, Rational(0));
  rd.rho_check.assign(rd.rank, Rational(0));
  for (int j = 0; j < rd.rank; ++j) rd.rho_hat[j] = Rational(rd.two_rho_hat[j], 2);
  for (auto& cr : rd.pos_coroots)
    for (int j = 0; j < rd.rank; ++j) rd.rho_check[j] += Rational(cr[j], 2);
  for (int i = 0; i < rd.ss; ++i)
    if (dotq(rd.rho_hat, rd.simple_coroots[i]) != Rational(1))
      throw std::logic_error(rd.type_tag + ": <rho_hat, simple coroot> != 1");
}

}  // namespace

bool RootDatum::is_positive_root(const Vec& f) const {
  return std::binary_search(pos_roots.begin(), pos_roots.end(), f);
}

int RootDatum::positive_root_index(const Vec& f) const {
  auto it = std::lower_bound(pos_roots.begin(), pos_roots.end(), f);
  if (it == pos_roots.end() || *it != f) return -1;
  return (int)(it - pos_roots.begin());
}

RootDatum build_root_datum(const std::string& spec) {
  RootDatum rd;
  rd.type_tag = spec;
  if (spec.rfind("GL", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(spec.substr(2));
    } catch (...) {
      throw std::invalid_argument("unsupported group spec: " + spec);
    }
    if (n < 1) throw std::invalid_argument("rank must be positive: " + spec);
    rd.rank = n;
    rd.ss = n - 1;
    rd.cartan = cartan_matrix('A', std::max(n - 1, 0));
    for (int i = 0; i + 1 < n; ++i) {
      Vec r(n, 0), c(n, 0);
      r[i] = 1;
      r[i + 1] = -1;
      c[i] = 1;
      c[i + 1] = -1;
      rd.simple_roots.push_back(r);
      rd.simple_coroots.push_back(c);
    }
    finish_root_datum(rd, (long long)n * (n - 1) / 2);
    return rd;
  }
  TypeInfo t = parse_type(spec);
  rd.rank = t.n;
  rd.ss = t.n;
  rd.cartan = cartan_matrix(t.letter, t.n);
  // Adjoint realization: the cocharacter lattice has the fundamental
  // coweights as standard basis, so simple roots are the dual basis and
  // simple coroots are the columns of the Cartan matrix.
  for (int i = 0; i < t.n; ++i) {
    Vec r(t.n, 0);
    r[i] = 1;
    rd.simple_roots.push_back(r);
    Vec c(t.n);
    for (int j = 0; j < t.n; ++j) c[j] = rd.cartan[j][i];
    rd.simple_coroots.push_back(c);
  }
  finish_root_datum(rd, expected_positive_roots(t.letter, t.n));
  return rd;
}

Vec reflect_vec(const RootDatum& rd, int i, const Vec& v) {
  return vsub(v, vscale(dot(rd.simple_roots[i], v), rd.simple_coroots[i]));
}

QVec reflect_vec(const RootDatum& rd, int i, const QVec& v) {
  Rational c = dotq(rd.simple_roots[i], v);
  return qsub(v, qscale(c, to_q(rd.simple_coroots[i])));
}

Vec reflect_fun(const RootDatum& rd, int i, const Vec& f) {
  return vsub(f, vscale(dot(f, rd.simple_coroots[i]), rd.simple_roots[i]));
}

Vec apply_word(const RootDatum& rd, const WeylWord& w, Vec v) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = reflect_vec(rd, *it, v);
  return v;
}

QVec apply_word(const RootDatum& rd, const WeylWord& w, QVec v) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = reflect_vec(rd, *it, v);
  return v;
}

Vec apply_word_fun(const RootDatum& rd, const WeylWord& w, Vec f) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) f = reflect_fun(rd, *it, f);
  return f;
}

Vec apply_inverse(const RootDatum& rd, const WeylWord& w, Vec v) {
  for (int i : w.letters) v = reflect_vec(rd, i, v);
  return v;
}

bool is_dominant(const RootDatum& rd, const Vec& v) {
  for (auto& r : rd.simple_roots)
    if (dot(r, v) < 0) return false;
  return true;
}

bool is_dominant(const RootDatum& rd, const QVec& v) {
  for (auto& r : rd.simple_roots)
    if (dotq(r, v).sign() < 0) return false;
  return true;
}

std::pair<Vec, WeylWord> dominant_representative(const RootDatum& rd, Vec v) {
  WeylWord w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rd.ss; ++i) {
      if (dot(rd.simple_roots[i], v) < 0) {
        v = reflect_vec(rd, i, v);
        w.letters.insert(w.letters.begin(), i);
        moved = true;
        break;
      }
    }
  }
  return {v, w};
}

std::pair<QVec, WeylWord> dominant_representative(const RootDatum& rd, QVec v) {
  WeylWord w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rd.ss; ++i) {
      if (dotq(rd.simple_roots[i], v).sign() < 0) {
        v = reflect_vec(rd, i, v);
        w.letters.insert(w.letters.begin(), i);
        moved = true;
        break;
      }
    }
  }
  return {v, w};
}

std::pair<Vec, WeylWord> antidominant_representative(const RootDatum& rd, Vec v) {
  WeylWord w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rd.ss; ++i) {
      if (dot(rd.simple_roots[i], v) > 0) {
        v = reflect_vec(rd, i, v);
        w.letters.insert(w.letters.begin(), i);
        moved = true;
        break;
      }
    }
  }
  return {v, w};
}

int weyl_length(const RootDatum& rd, const WeylWord& w) {
  int count = 0;
  for (auto& r : rd.pos_roots) {
    Vec img = apply_word_fun(rd, w, r);
    if (!rd.is_positive_root(img)) ++count;
  }
  return count;
}

std::vector<WeylWord> minimal_coset_reps(const RootDatum& rd, const std::set<int>& levi) {
  for (int i : levi)
    if (i < 0 || i >= rd.ss) throw std::invalid_argument("levi index out of range");
  // Characteristic vector: pairs to 0 with levi simple roots, positively
  // with the rest; its stabilizer is exactly W_levi, so BFS depth equals
  // minimal coset length.
  // Solve <alpha_j, v> = [j not in levi] exactly over the rationals, then
  // clear denominators; any solution works since only pairings matter.
  Vec v(rd.rank, 0);
  {
    int m = rd.ss, n = rd.rank;
    std::vector<QVec> a(m, QVec(n + 1));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = Rational(rd.simple_roots[i][j]);
      a[i][n] = Rational(levi.count(i) ? 0 : 1);
    }
    // Gaussian elimination (the system is underdetermined when rank > ss;
    // free variables are set to 0).
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < n && row < m; ++c) {
      int p = -1;
      for (int r = row; r < m; ++r)
        if (!a[r][c].is_zero()) {
          p = r;
          break;
        }
      if (p < 0) continue;
      std::swap(a[row], a[p]);
      Rational inv = Rational(1) / a[row][c];
      for (int j = c; j <= n; ++j) a[row][j] *= inv;
      for (int r = 0; r < m; ++r) {
        if (r == row || a[r][c].is_zero()) continue;
        Rational f = a[r][c];
        for (int j = c; j <= n; ++j) a[r][j] -= f * a[row][j];
      }
      pivot_col.push_back(c);
      ++row;
    }
    QVec x(n, Rational(0));
    for (int r = 0; r < (int)pivot_col.size(); ++r) x[pivot_col[r]] = a[r][n];
    long long denom = 1;
    for (auto& q : x) denom = std::lcm(denom, q.den());
    for (int j = 0; j < n; ++j) v[j] = (x[j] * Rational(denom)).to_integer();
  }

  std::vector<WeylWord> reps;
  std::map<Vec, WeylWord> visited;
  std::deque<Vec> queue;
  visited[v] = WeylWord{};
  queue.push_back(v);
  reps.push_back(WeylWord{});
  while (!queue.empty()) {
    Vec cur = queue.front();
    queue.pop_front();
    WeylWord w = visited.at(cur);
    for (int i = 0; i < rd.ss; ++i) {
      Vec nxt = reflect_vec(rd, i, cur);
      if (visited.count(nxt)) continue;
      WeylWord nw = word_concat(WeylWord{{i}}, w);
      visited[nxt] = nw;
      queue.push_back(nxt);
      reps.push_back(nw);
    }
  }
  return reps;
}

std::set<Vec> weyl_orbit(const RootDatum& rd, const Vec& v, long long cap) {
  std::set<Vec> orbit{v};
  std::deque<Vec> queue{v};
  while (!queue.empty()) {
    Vec cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rd.ss; ++i) {
      Vec nxt = reflect_vec(rd, i, cur);
      if (orbit.insert(nxt).second) {
        if ((long long)orbit.size() > cap)
          throw std::runtime_error("weyl_orbit: orbit size exceeds cap " + std::to_string(cap));
        queue.push_back(nxt);
      }
    }
  }
  return orbit;
}

std::set<QVec> weyl_orbit(const RootDatum& rd, const QVec& v, long long cap) {
  std::set<QVec> orbit{v};
  std::deque<QVec> queue{v};
  while (!queue.empty()) {
    QVec cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rd.ss; ++i) {
      QVec nxt = reflect_vec(rd, i, cur);
      if (orbit.insert(nxt).second) {
        if ((long long)orbit.size() > cap)
          throw std::runtime_error("weyl_orbit: orbit size exceeds cap " + std::to_string(cap));
        queue.push_back(nxt);
      }
    }
  }
  return orbit;
}

IntMat word_matrix(const RootDatum& rd, const WeylWord& w) {
  IntMat m(rd.rank, Vec(rd.rank, 0));
  for (int j = 0; j < rd.rank; ++j) {
    Vec e(rd.rank, 0);
    e[j] = 1;
    Vec img = apply_word(rd, w, e);
    for (int i = 0; i < rd.rank; ++i) m[i][j] = img[i];
  }
  return m;
}

}  // namespace kottwitz
