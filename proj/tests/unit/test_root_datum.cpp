#include <doctest.h>

#include <set>

#include "kottwitz/root_datum.hpp"

using namespace kottwitz;

TEST_CASE("positive root counts match the classification") {
  CHECK(build_root_datum("A1").pos_roots.size() == 1);
  CHECK(build_root_datum("A3").pos_roots.size() == 6);
  CHECK(build_root_datum("B2").pos_roots.size() == 4);
  CHECK(build_root_datum("B3").pos_roots.size() == 9);
  CHECK(build_root_datum("C3").pos_roots.size() == 9);
  CHECK(build_root_datum("D4").pos_roots.size() == 12);
  CHECK(build_root_datum("G2").pos_roots.size() == 6);
  CHECK(build_root_datum("F4").pos_roots.size() == 24);
  CHECK(build_root_datum("E6").pos_roots.size() == 36);
  CHECK(build_root_datum("GL4").pos_roots.size() == 6);
}

TEST_CASE("rho pairs to one with every simple coroot") {
  for (const char* name : {"A2", "B3", "C2", "D4", "G2", "F4", "GL3"}) {
    const RootDatum rd = build_root_datum(name);
    for (const Vec& cv : rd.simple_coroots) CHECK(dotq(rd.rho_hat, cv) == Rational(1));
  }
}

TEST_CASE("adjoint A2 realization") {
  const RootDatum rd = build_root_datum("A2");
  CHECK(rd.rank == 2);
  CHECK(rd.ss == 2);
  CHECK(rd.simple_roots[0] == Vec{1, 0});
  CHECK(rd.simple_roots[1] == Vec{0, 1});
  CHECK(rd.simple_coroots[0] == Vec{2, -1});
  CHECK(rd.simple_coroots[1] == Vec{-1, 2});
  CHECK(rd.two_rho_hat == Vec{2, 2});
  CHECK(rd.is_positive_root(Vec{1, 1}));
  CHECK_FALSE(rd.is_positive_root(Vec{2, 1}));
}

TEST_CASE("GL3 realization") {
  const RootDatum rd = build_root_datum("GL3");
  CHECK(rd.rank == 3);
  CHECK(rd.ss == 2);
  CHECK(rd.simple_roots[0] == Vec{1, -1, 0});
  CHECK(rd.simple_coroots[1] == Vec{0, 1, -1});
  CHECK(rd.two_rho_hat == Vec{2, 0, -2});
}

TEST_CASE("a word is the product of its letters, rightmost acting first") {
  const RootDatum rd = build_root_datum("GL3");
  const WeylWord w{{0, 1}};  // s0 applied after s1
  // s1 swaps coords 2,3; s0 swaps coords 1,2.
  CHECK(apply_word(rd, w, Vec{5, 7, 9}) == Vec{9, 5, 7});
  CHECK(apply_inverse(rd, w, apply_word(rd, w, Vec{5, 7, 9})) == Vec{5, 7, 9});
}

TEST_CASE("dominant sort returns a word mapping input to the representative") {
  const RootDatum rd = build_root_datum("B3");
  const Vec v{-3, 1, -2};
  auto [dom, w] = dominant_representative(rd, v);
  CHECK(is_dominant(rd, dom));
  CHECK(apply_word(rd, w, v) == dom);
  auto [dom2, w2] = dominant_representative(rd, dom);
  CHECK(dom2 == dom);
  CHECK(w2.letters.empty());

  auto [anti, aw] = antidominant_representative(rd, v);
  CHECK(apply_word(rd, aw, v) == anti);
  for (const Vec& r : rd.simple_roots) CHECK(dot(r, anti) <= 0);
}

TEST_CASE("weyl length counts inverted positive roots") {
  const RootDatum rd = build_root_datum("A2");
  CHECK(weyl_length(rd, WeylWord{}) == 0);
  CHECK(weyl_length(rd, WeylWord{{0}}) == 1);
  CHECK(weyl_length(rd, WeylWord{{0, 1}}) == 2);
  CHECK(weyl_length(rd, WeylWord{{0, 1, 0}}) == 3);
  CHECK(weyl_length(rd, WeylWord{{0, 0}}) == 0);
  CHECK(weyl_length(rd, WeylWord{{1, 0, 1}}) == 3);  // same longest element
}

TEST_CASE("minimal coset representatives") {
  const RootDatum rd = build_root_datum("A2");
  const auto full = minimal_coset_reps(rd, {});
  CHECK(full.size() == 6);
  CHECK(full.front().letters.empty());

  const auto reps = minimal_coset_reps(rd, {0});
  REQUIRE(reps.size() == 3);
  std::multiset<int> lens;
  for (const auto& w : reps) lens.insert(weyl_length(rd, w));
  CHECK(lens == std::multiset<int>{0, 1, 2});
  for (const auto& w : reps) {
    // Minimal representatives keep the levi simple root positive.
    CHECK(rd.is_positive_root(apply_word_fun(rd, w, rd.simple_roots[0])));
    CHECK((int)w.letters.size() == weyl_length(rd, w));
  }
}

TEST_CASE("weyl orbits") {
  const RootDatum gl2 = build_root_datum("GL2");
  CHECK(weyl_orbit(gl2, Vec{1, 0}).size() == 2);
  const RootDatum a2 = build_root_datum("A2");
  CHECK(weyl_orbit(a2, Vec{1, 1}).size() == 6);   // regular: full group
  CHECK(weyl_orbit(a2, Vec{1, 0}).size() == 3);   // fundamental coweight
  CHECK_THROWS_AS(weyl_orbit(a2, Vec{1, 1}, 3), std::runtime_error);
}

TEST_CASE("word matrix represents the action") {
  const RootDatum rd = build_root_datum("B2");
  const WeylWord w{{1, 0, 1}};
  const IntMat m = word_matrix(rd, w);
  const Vec v{4, -7};
  CHECK(mat_vec(m, v) == apply_word(rd, w, v));
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(build_root_datum("H3"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum("E9"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum("B1"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum("GLx"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum("A0"), std::invalid_argument);
}
