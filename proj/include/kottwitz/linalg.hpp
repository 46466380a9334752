#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "kottwitz/rational.hpp"

namespace kottwitz {

using Vec = std::vector<long long>;
using QVec = std::vector<Rational>;
using IntMat = std::vector<Vec>;

inline long long dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dotq(const Vec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dotq: size mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

inline Rational dotq(const QVec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dotq: size mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

inline Rational dotq(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dotq: size mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vneg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec vscale(long long c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Vec vzero(int n) { return Vec(n, 0); }

inline bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

inline QVec to_q(const Vec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rational(a[i]);
  return r;
}

inline QVec qadd(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec qsub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec qscale(const Rational& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline IntMat identity_mat(int n) {
  IntMat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Vec mat_vec(const IntMat& m, const Vec& v) {
  Vec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

inline QVec mat_vec_q(const IntMat& m, const QVec& v) {
  QVec r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = dotq(m[i], v);
  return r;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat r(n, Vec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j)
      if (a[i][j] != 0)
        for (size_t c = 0; c < m; ++c) r[i][c] += a[i][j] * b[j][c];
  return r;
}

inline IntMat mat_sub(const IntMat& a, const IntMat& b) {
  IntMat r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

// Exact inverse of a unimodular integer matrix via rational elimination.
inline IntMat mat_inverse_unimodular(const IntMat& m) {
  int n = (int)m.size();
  std::vector<QVec> a(n, QVec(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = Rational(1);
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) throw std::invalid_argument("mat_inverse_unimodular: singular matrix");
    std::swap(a[c], a[p]);
    Rational inv = Rational(1) / a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  IntMat out(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j].to_integer();
  return out;
}

// Smith normal form: U * A * V = diag(d_1, ..., d_r, 0, ...) with
// d_1 | d_2 | ... and U, V unimodular.
struct Smith {
  IntMat U, V;
  std::vector<long long> diag;  // length min(m, n)
  int m = 0, n = 0;
};

inline Smith smith_normal_form(IntMat a) {
  int m = (int)a.size();
  int n = m ? (int)a[0].size() : 0;
  Smith s;
  s.m = m;
  s.n = n;
  s.U = identity_mat(m);
  s.V = identity_mat(n);
  auto row_add = [&](int dst, int src, long long q) {
    for (int j = 0; j < n; ++j) a[dst][j] += q * a[src][j];
    for (int j = 0; j < m; ++j) s.U[dst][j] += q * s.U[src][j];
  };
  auto col_add = [&](int dst, int src, long long q) {
    for (int i = 0; i < m; ++i) a[i][dst] += q * a[i][src];
    for (int i = 0; i < n; ++i) s.V[i][dst] += q * s.V[i][src];
  };
  auto row_swap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(s.U[i], s.U[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < n; ++r) std::swap(s.V[r][i], s.V[r][j]);
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < n; ++j) a[i][j] = -a[i][j];
    for (int j = 0; j < m; ++j) s.U[i][j] = -s.U[i][j];
  };

  int t = 0;
  while (t < m && t < n) {
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
          best = std::abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        long long q = a[i][t] / a[t][t];
        row_add(i, t, -q);
        if (a[i][t] != 0) {
          row_swap(t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        long long q = a[t][j] / a[t][t];
        col_add(j, t, -q);
        if (a[t][j] != 0) {
          col_swap(t, j);
          dirty = true;
        }
      }
      if (!dirty) {
        // divisibility fix-up: fold any non-multiple into the pivot slot
        for (int i = t + 1; i < m && !dirty; ++i)
          for (int j = t + 1; j < n && !dirty; ++j)
            if (a[i][j] % a[t][t] != 0) {
              row_add(t, i, 1);
              dirty = true;
            }
      }
    }
    if (a[t][t] < 0) row_neg(t);
    ++t;
  }
  for (int i = 0; i < std::min(m, n); ++i) s.diag.push_back(i < t ? a[i][i] : 0);
  return s;
}

// Basis of the integer kernel of A (as a map Z^n -> Z^m).
inline std::vector<Vec> integer_kernel_basis(const IntMat& a) {
  Smith s = smith_normal_form(a);
  std::vector<Vec> basis;
  for (int j = 0; j < s.n; ++j) {
    long long d = j < (int)s.diag.size() ? s.diag[j] : 0;
    if (d != 0) continue;
    Vec col(s.n);
    for (int i = 0; i < s.n; ++i) col[i] = s.V[i][j];
    basis.push_back(col);
  }
  return basis;
}

// Presentation of the quotient Z^m / (column span of A), with a class map
// and an integral section. Coordinates of a class are a free-part vector
// and torsion residues normalized to [0, d).
struct Cokernel {
  Smith s;
  IntMat Uinv;
  std::vector<int> free_rows;
  std::vector<std::pair<int, long long>> torsion_rows;  // (row in normal coords, order > 1)

  int free_rank() const { return (int)free_rows.size(); }
  std::vector<long long> torsion_orders() const {
    std::vector<long long> t;
    for (auto& [r, d] : torsion_rows) t.push_back(d);
    return t;
  }

  std::pair<Vec, Vec> classify(const Vec& x) const {
    Vec y = mat_vec(s.U, x);
    Vec f, t;
    for (int r : free_rows) f.push_back(y[r]);
    for (auto& [r, d] : torsion_rows) t.push_back(((y[r] % d) + d) % d);
    return {f, t};
  }

  Vec lift(const Vec& f, const Vec& t) const {
    Vec y(s.m, 0);
    for (size_t k = 0; k < free_rows.size(); ++k) y[free_rows[k]] = f[k];
    for (size_t k = 0; k < torsion_rows.size(); ++k) y[torsion_rows[k].first] = t[k];
    return mat_vec(Uinv, y);
  }

  std::string display() const {
    std::string out;
    if (!free_rows.empty()) {
      out = "Z";
      if (free_rows.size() > 1) out += "^" + std::to_string(free_rows.size());
    }
    for (auto& [r, d] : torsion_rows) {
      if (!out.empty()) out += " + ";
      out += "Z/" + std::to_string(d);
    }
    if (out.empty()) out = "0";
    return out;
  }
};

// Cokernel of the map whose matrix has the given columns (m x k).
inline Cokernel cokernel_of_columns(const IntMat& a) {
  Cokernel c;
  c.s = smith_normal_form(a);
  c.Uinv = mat_inverse_unimodular(c.s.U);
  for (int r = 0; r < c.s.m; ++r) {
    long long d = r < (int)c.s.diag.size() ? c.s.diag[r] : 0;
    if (d == 0)
      c.free_rows.push_back(r);
    else if (d > 1)
      c.torsion_rows.push_back({r, d});
  }
  return c;
}

}  // namespace kottwitz
