#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kottwitz/linalg.hpp"

namespace kottwitz {

inline constexpr long long kDefaultCap = 1000000;

// A word in the simple reflections. Applying [i1, i2, ..., ik] to a vector
// computes s_{i1}(s_{i2}(... s_{ik}(v))), i.e. letters compose left to
// right as functions. Indices are 0-based internally.
struct WeylWord {
  std::vector<int> letters;

  int sign() const { return letters.size() % 2 ? -1 : 1; }
  bool operator==(const WeylWord& o) const { return letters == o.letters; }
  bool operator<(const WeylWord& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    return letters < o.letters;
  }
};

inline WeylWord word_concat(const WeylWord& a, const WeylWord& b) {
  WeylWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

inline WeylWord word_inverse(const WeylWord& a) {
  WeylWord w;
  w.letters.assign(a.letters.rbegin(), a.letters.rend());
  return w;
}

// Based root datum on a concrete lattice Z^rank. Roots are functionals
// (rows), coroots are vectors (columns of the Cartan matrix in the
// adjoint realization). Positive roots and coroots are generated jointly
// by reflection closure and stay index-aligned.
struct RootDatum {
  std::string type_tag;  // "A3", "B2", ..., "GL4"
  int rank = 0;          // lattice rank
  int ss = 0;            // number of simple roots
  IntMat cartan;         // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
  std::vector<Vec> pos_roots;
  std::vector<Vec> pos_coroots;  // pos_coroots[k] pairs with pos_roots[k]
  Vec two_rho_hat;               // sum of positive roots (functional)
  QVec rho_hat;                  // half of the above
  QVec rho_check;                // half sum of positive coroots (vector)

  bool is_positive_root(const Vec& f) const;
  int positive_root_index(const Vec& f) const;  // -1 if absent
};

RootDatum build_root_datum(const std::string& spec);

// Reflection s_i on cocharacter vectors and on character functionals.
Vec reflect_vec(const RootDatum& rd, int i, const Vec& v);
QVec reflect_vec(const RootDatum& rd, int i, const QVec& v);
Vec reflect_fun(const RootDatum& rd, int i, const Vec& f);

Vec apply_word(const RootDatum& rd, const WeylWord& w, Vec v);
QVec apply_word(const RootDatum& rd, const WeylWord& w, QVec v);
Vec apply_word_fun(const RootDatum& rd, const WeylWord& w, Vec f);
Vec apply_inverse(const RootDatum& rd, const WeylWord& w, Vec v);

bool is_dominant(const RootDatum& rd, const Vec& v);
bool is_dominant(const RootDatum& rd, const QVec& v);

// Greedy sort into the closed dominant chamber; the returned word maps the
// input to the dominant representative.
std::pair<Vec, WeylWord> dominant_representative(const RootDatum& rd, Vec v);
std::pair<QVec, WeylWord> dominant_representative(const RootDatum& rd, QVec v);
std::pair<Vec, WeylWord> antidominant_representative(const RootDatum& rd, Vec v);

// Number of positive roots sent negative (the length oracle for tests).
int weyl_length(const RootDatum& rd, const WeylWord& w);

std::vector<WeylWord> minimal_coset_reps(const RootDatum& rd, const std::set<int>& levi);

std::set<Vec> weyl_orbit(const RootDatum& rd, const Vec& v, long long cap = kDefaultCap);
std::set<QVec> weyl_orbit(const RootDatum& rd, const QVec& v, long long cap = kDefaultCap);

// Matrix of the word acting on cocharacter vectors.
IntMat word_matrix(const RootDatum& rd, const WeylWord& w);

}  // namespace kottwitz
