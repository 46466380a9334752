#include <doctest.h>

#include "kottwitz/groups.hpp"
#include "kottwitz/kottwitz.hpp"

using namespace kottwitz;

namespace {

CoinvariantLattice lattice_of(const std::string& name) {
  const GroupSpec g = build_group(name);
  return coinvariants(g.rd, g.twist);
}

}  // namespace

TEST_CASE("GL2 minuscule and non-minuscule sets") {
  const CoinvariantLattice lat = lattice_of("GL2");

  const auto single = enumerate_bgmu_un(lat, Vec{1, 0});
  REQUIRE(single.size() == 1);
  CHECK(single[0].slope == QVec{Rational(1), Rational(0)});
  CHECK(single[0].hn_reduction == project_to_coinvariants(lat, Vec{0, 1}));
  CHECK(single[0].levi.empty());
  CHECK(single[0].coset_reps.size() == 2);

  const auto pair = enumerate_bgmu_un(lat, Vec{2, 0});
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].cls == project_to_coinvariants(lat, Vec{2, 0}));
  CHECK(pair[1].cls == project_to_coinvariants(lat, Vec{1, 1}));
  CHECK(pair[1].levi == std::vector<int>{0});
  CHECK(pair[1].coset_reps.size() == 1);
  CHECK(pair[0].kappa == pair[1].kappa);
}

TEST_CASE("GL3 enumeration") {
  const CoinvariantLattice lat = lattice_of("GL3");

  CHECK(enumerate_bgmu_un(lat, Vec{1, 1, 0}).size() == 1);

  const auto pts = enumerate_bgmu_un(lat, Vec{2, 1, 0});
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].cls == project_to_coinvariants(lat, Vec{2, 1, 0}));
  CHECK(pts[0].levi.empty());
  CHECK(pts[0].coset_reps.size() == 6);
  CHECK(pts[1].cls == project_to_coinvariants(lat, Vec{1, 1, 1}));
  CHECK(pts[1].levi == std::vector<int>{0, 1});
  CHECK(pts[1].coset_reps.size() == 1);
}

TEST_CASE("adjoint A2 with a minuscule coweight") {
  const CoinvariantLattice lat = lattice_of("A2");
  const auto pts = enumerate_bgmu_un(lat, Vec{1, 0});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].levi == std::vector<int>{1});
  REQUIRE(pts[0].coset_reps.size() == 3);
  std::multiset<int> lens(pts[0].coset_rep_rel_len.begin(), pts[0].coset_rep_rel_len.end());
  CHECK(lens == std::multiset<int>{0, 1, 2});
}

TEST_CASE("unitary rank-two set for the standard coweight") {
  const CoinvariantLattice lat = lattice_of("2A2");
  const Vec mu{1, 0, 0};
  const auto pts = enumerate_bgmu_un(lat, mu);
  REQUIRE(pts.size() == 2);

  const KottwitzPoint& ord = pts[0];
  const KottwitzPoint& basic = pts[1];

  CHECK(ord.cls == project_to_coinvariants(lat, mu));
  CHECK(ord.slope == QVec{Rational(1, 2), Rational(0), Rational(-1, 2)});
  CHECK(ord.levi.empty());
  CHECK(ord.coset_reps.size() == 2);
  CHECK(ord.hn_reduction == project_to_coinvariants(lat, Vec{0, 0, 1}));

  CHECK(basic.cls == project_to_coinvariants(lat, Vec{0, 1, 0}));
  CHECK(basic.slope == QVec{Rational(0), Rational(0), Rational(0)});
  CHECK(basic.levi == std::vector<int>{0});
  CHECK(basic.coset_reps.size() == 1);

  CHECK(class_sub(lat, ord.cls, basic.cls) == lat.alpha[0]);
  CHECK(coinvariant_leq(lat, basic.cls, ord.cls));
  CHECK_FALSE(coinvariant_leq(lat, ord.cls, basic.cls));
  CHECK(ord.kappa == basic.kappa);

  const auto [top, mu_class] = mu_ordinary_and_basic(lat, mu);
  CHECK(top.cls == ord.cls);
  CHECK(mu_class == ord.kappa);
}

TEST_CASE("fundamental group invariants") {
  const CoinvariantLattice u3 = lattice_of("2A2");
  const Cokernel pi1 = pi1_cokernel(u3);
  CHECK(pi1.free_rank() == 0);
  CHECK(pi1.torsion_orders() == std::vector<long long>{2});
  CHECK(kappa_class(u3, pi1, Vec{1, 0, 0}) == kappa_class(u3, pi1, Vec{0, 1, 0}));
  CHECK(kappa_class(u3, pi1, Vec{1, 1, 0}) != kappa_class(u3, pi1, Vec{1, 0, 0}));

  const CoinvariantLattice gl2 = lattice_of("GL2");
  const Cokernel pi1gl = pi1_cokernel(gl2);
  CHECK(pi1gl.free_rank() == 1);
  CHECK(pi1gl.torsion_orders().empty());
}

TEST_CASE("unramified point normalizes its input class") {
  const CoinvariantLattice lat = lattice_of("2A2");
  const KottwitzPoint pt = unramified_point(lat, project_to_coinvariants(lat, Vec{0, 0, 1}));
  CHECK(pt.cls == project_to_coinvariants(lat, Vec{1, 0, 0}));
}

TEST_CASE("component dimension pairs against the positive-root sum") {
  const CoinvariantLattice lat = lattice_of("GL2");
  CHECK(component_dimension(lat, project_to_coinvariants(lat, Vec{-3, -5})) == 2);
  CHECK(component_dimension(lat, project_to_coinvariants(lat, Vec{4, 4})) == 0);
}

TEST_CASE("GL_n polygons") {
  const auto polys = bgmu_gln(3, Vec{1, 1, 0});
  REQUIRE(polys.size() == 3);
  CHECK(polys[0] == Polygon{Rational(1), Rational(1), Rational(0)});
  CHECK(polys[1] == Polygon{Rational(1), Rational(1, 2), Rational(1, 2)});
  CHECK(polys[2] == Polygon{Rational(2, 3), Rational(2, 3), Rational(2, 3)});
  CHECK(polygon_is_integral(polys[0]));
  CHECK_FALSE(polygon_is_integral(polys[1]));
  CHECK_FALSE(polygon_is_integral(polys[2]));

  CHECK(bgmu_gln(2, Vec{1, 0}).size() == 2);
  CHECK(bgmu_gln(2, Vec{2, 0}).size() == 2);
  CHECK(bgmu_gln(4, Vec{1, 1, 1, 0}).size() == 4);
}

TEST_CASE("rational classes outnumber the integral ones") {
  const CoinvariantLattice lat = lattice_of("GL3");
  // Height one: etale-by-connected chain (1,0,0), (1/2,1/2,0), (1/3,1/3,1/3).
  CHECK(enumerate_bgmu_un(lat, Vec{1, 0, 0}).size() == 1);
  CHECK(bgmu_gln(3, Vec{1, 0, 0}).size() == 3);
  CHECK(enumerate_bgmu_un(lat, Vec{2, 0, 0}).size() == 2);
  CHECK(bgmu_gln(3, Vec{2, 0, 0}).size() == 4);
}

TEST_CASE("modulus character decomposition") {
  const CoinvariantLattice a2 = lattice_of("A2");
  const auto a2pts = enumerate_bgmu_un(a2, Vec{1, 1});
  const ModulusParts full = modulus_decomposition(a2, WeylWord{}, a2pts[0]);
  CHECK(full.pos == Vec{2, 2});
  CHECK(full.zero == Vec{0, 0});
  CHECK(full.neg == Vec{0, 0});

  const CoinvariantLattice gl2 = lattice_of("GL2");
  const auto central = enumerate_bgmu_un(gl2, Vec{1, 1});
  REQUIRE(central.size() == 1);
  const ModulusParts z = modulus_decomposition(gl2, WeylWord{}, central[0]);
  CHECK(z.zero == Vec{1, -1});
  CHECK(z.pos == Vec{0, 0});
  CHECK(z.neg == Vec{0, 0});
  CHECK_THROWS_AS(modulus_decomposition(gl2, WeylWord{{0}}, central[0]), std::invalid_argument);

  const CoinvariantLattice u3 = lattice_of("2A2");
  const auto u3pts = enumerate_bgmu_un(u3, Vec{1, 0, 0});
  const ModulusParts flip = modulus_decomposition(u3, u3.rel_reflection[0], u3pts[0]);
  CHECK(flip.neg == Vec{-2, 0, 2});
  CHECK(flip.pos == Vec{0, 0, 0});
  CHECK(flip.zero == Vec{0, 0, 0});
}
