#include <doctest.h>

#include "kottwitz/characters.hpp"
#include "kottwitz/groups.hpp"

using namespace kottwitz;

namespace {

CoinvariantLattice lattice_of(const std::string& name) {
  const GroupSpec g = build_group(name);
  return coinvariants(g.rd, g.twist);
}

// Restriction to X_*(A) of the diagonal character with the given values on
// the standard basis vectors; independent of the computed kernel basis.
UnramifiedCharacter from_std(const CoinvariantLattice& lat,
                             const std::vector<CharacterValue>& std_vals) {
  UnramifiedCharacter chi;
  for (const Vec& b : lat.inv_basis) {
    CharacterValue v = CharacterValue::one();
    for (size_t i = 0; i < b.size(); ++i) v = v.times(std_vals[i].pow(b[i]));
    chi.values.push_back(v);
  }
  return chi;
}

CharacterValue cv(const std::string& s) { return CharacterValue::parse(s); }

}  // namespace

TEST_CASE("character value algebra and parsing") {
  CHECK(cv("q").k == Rational(1));
  CHECK(cv("q^-4") == CharacterValue{Rational(1), Rational(-4)});
  CHECK(cv("3/2*q^2") == CharacterValue{Rational(3, 2), Rational(2)});
  CHECK(cv("-1*q") == CharacterValue{Rational(-1), Rational(1)});
  CHECK(cv("5").is_one() == false);
  CHECK(cv("1").is_one());

  CHECK(cv("q^3").times(cv("q^-3")).is_one());
  CHECK(cv("2*q").pow(3) == CharacterValue{Rational(8), Rational(3)});
  CHECK(cv("2*q").pow(-1) == CharacterValue{Rational(1, 2), Rational(-1)});
  CHECK(cv("2*q").pow(0).is_one());
  CHECK(cv("-1*q").inverse() == CharacterValue{Rational(-1), Rational(-1)});

  CHECK(cv("-1*q^1").str() == "-1*q^1");
  CHECK(cv(cv("3/2*q^-2").str()) == cv("3/2*q^-2"));
  CHECK(cv("7").str() == "7");

  CHECK_THROWS_AS(cv(""), std::invalid_argument);
  CHECK_THROWS_AS(cv("0"), std::invalid_argument);
  CHECK_THROWS_AS(cv("q^1/2"), std::invalid_argument);
  CHECK_THROWS_AS(cv("2*z^3"), std::invalid_argument);
}

TEST_CASE("evaluation on the invariant sublattice") {
  const CoinvariantLattice lat = lattice_of("2A2");
  REQUIRE(lat.inv_basis.size() == 1);
  const Vec w{1, 0, -1};
  const UnramifiedCharacter chi = from_std(lat, {cv("q^3"), cv("1"), cv("1")});
  CHECK(evaluate(lat, chi, w) == cv("q^3"));
  CHECK(evaluate(lat, chi, Vec{-2, 0, 2}) == cv("q^-6"));
  CHECK(evaluate(lat, chi, Vec{0, 0, 0}).is_one());
  CHECK_THROWS_AS(evaluate(lat, chi, Vec{1, 0, 0}), std::invalid_argument);

  UnramifiedCharacter wrong;
  wrong.values = {cv("q"), cv("q")};
  CHECK_THROWS_AS(evaluate(lat, wrong, w), std::invalid_argument);
}

TEST_CASE("modulus square root") {
  const CoinvariantLattice gl2 = lattice_of("GL2");
  CHECK(delta_b_half(gl2, Vec{1, 0}) == CharacterValue{Rational(1), Rational(-1, 2)});
  CHECK(delta_b_half(gl2, Vec{1, 1}).is_one());

  const CoinvariantLattice u3 = lattice_of("2A2");
  CHECK(delta_b_half(u3, Vec{1, 0, -1}) == CharacterValue{Rational(1), Rational(-2)});
}

TEST_CASE("orbit test values") {
  const CoinvariantLattice lat = lattice_of("2A2");
  const UnramifiedCharacter chi = from_std(lat, {cv("q^3"), cv("1"), cv("1")});

  const auto [t1, f1] = orbit_test_value(lat, chi, lat.rd.simple_coroots[0]);
  CHECK(t1 == cv("q^3"));
  CHECK(f1 == 2);

  const auto [t2, f2] = orbit_test_value(lat, chi, Vec{1, 0, -1});
  CHECK(t2 == cv("q^3"));
  CHECK(f2 == 1);

  const auto [t3, f3] = orbit_test_value(lat, chi, Vec{1, 0, 0});
  CHECK(t3 == cv("q^3"));
  CHECK(f3 == 2);
}

TEST_CASE("condition ladder on the unitary group") {
  const CoinvariantLattice lat = lattice_of("2A2");
  auto ladder_for = [&](const std::string& t) {
    return condition_ladder(lat, from_std(lat, {cv(t), cv("1"), cv("1")}));
  };

  const ConditionLadder top = ladder_for("q^3");
  CHECK(top.weakly_generic);
  CHECK(top.generic);
  CHECK(top.cond3);
  CHECK(top.cond4);
  CHECK(top.weakly_normalized_regular);
  CHECK(top.normalized_regular);
  CHECK(top.regular);

  const ConditionLadder sq = ladder_for("q^2");
  CHECK_FALSE(sq.weakly_generic);
  CHECK_FALSE(sq.generic);
  CHECK(sq.cond3);
  CHECK(sq.cond4);
  CHECK_FALSE(sq.weakly_normalized_regular);
  CHECK_FALSE(sq.normalized_regular);
  CHECK(sq.regular);

  const ConditionLadder lin = ladder_for("q");
  CHECK(lin.weakly_generic);
  CHECK_FALSE(lin.generic);
  CHECK(lin.cond3);
  CHECK_FALSE(lin.cond4);
  CHECK_FALSE(lin.normalized_regular);
  CHECK(lin.regular);

  // Sign twist: every plain orbit test passes, the squared one does not.
  const ConditionLadder sgn = ladder_for("-1*q");
  CHECK(sgn.weakly_generic);
  CHECK(sgn.generic);
  CHECK(sgn.cond3);
  CHECK_FALSE(sgn.cond4);
  CHECK(sgn.weakly_normalized_regular);
  CHECK_FALSE(sgn.normalized_regular);
  CHECK(sgn.regular);

  const ConditionLadder triv = ladder_for("1");
  CHECK_FALSE(triv.weakly_generic);
  CHECK_FALSE(triv.cond3);
  CHECK_FALSE(triv.cond4);
  CHECK_FALSE(triv.regular);
}

TEST_CASE("condition ladder on split groups and tori") {
  const CoinvariantLattice gl2 = lattice_of("GL2");
  const ConditionLadder good = condition_ladder(gl2, from_std(gl2, {cv("q^2"), cv("1")}));
  CHECK(good.generic);
  CHECK(good.cond3);
  CHECK(good.cond4);
  CHECK(good.normalized_regular);
  CHECK(good.regular);

  const ConditionLadder unit = condition_ladder(gl2, from_std(gl2, {cv("q"), cv("1")}));
  CHECK(unit.weakly_generic == false);  // the only coroot orbit has f = 1
  CHECK(unit.regular);

  // A torus has no roots: every condition holds, even for the trivial character.
  const CoinvariantLattice gl1 = lattice_of("GL1");
  const ConditionLadder torus = condition_ladder(gl1, from_std(gl1, {cv("1")}));
  CHECK(torus.weakly_generic);
  CHECK(torus.generic);
  CHECK(torus.cond3);
  CHECK(torus.cond4);
  CHECK(torus.normalized_regular);
  CHECK(torus.regular);
}

TEST_CASE("coweight regularity, strong mode") {
  const CoinvariantLattice gl2 = lattice_of("GL2");
  const Vec mu{1, 0};
  const auto ok = mu_regularity(gl2, from_std(gl2, {cv("q^2"), cv("1")}), mu, MuRegMode::Strong);
  CHECK(ok.holds);
  const auto bad = mu_regularity(gl2, from_std(gl2, {cv("q"), cv("1")}), mu, MuRegMode::Strong);
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness.find("failing weight pair") != std::string::npos);

  const CoinvariantLattice u3 = lattice_of("2A2");
  const Vec std3{1, 0, 0};
  CHECK(mu_regularity(u3, from_std(u3, {cv("q^3"), cv("1"), cv("1")}), std3, MuRegMode::Strong)
            .holds);
  CHECK_FALSE(
      mu_regularity(u3, from_std(u3, {cv("q^2"), cv("1"), cv("1")}), std3, MuRegMode::Strong)
          .holds);

  CHECK_THROWS_AS(
      mu_regularity(gl2, from_std(gl2, {cv("q^2"), cv("1")}), Vec{0, 1}, MuRegMode::Strong),
      std::invalid_argument);
}

TEST_CASE("coweight regularity, decomposed mode") {
  const CoinvariantLattice gl2 = lattice_of("GL2");
  const UnramifiedCharacter chi = from_std(gl2, {cv("q^2"), cv("1")});

  const auto rep = mu_regularity(gl2, chi, Vec{2, 0}, MuRegMode::Decomposed);
  CHECK(rep.holds);
  CHECK(rep.witness.find("decomposition:") != std::string::npos);

  const std::vector<Vec> pieces{{1, 0}, {1, 0}};
  const auto rep2 = mu_regularity(gl2, chi, Vec{2, 0}, MuRegMode::Decomposed, &pieces);
  CHECK(rep2.holds);
  CHECK(rep2.witness.find("(1,0) (1,0)") != std::string::npos);

  const auto bad = mu_regularity(gl2, from_std(gl2, {cv("q"), cv("1")}), Vec{2, 0},
                                 MuRegMode::Decomposed);
  CHECK_FALSE(bad.holds);

  const std::vector<Vec> neither{{2, 0}};
  CHECK_THROWS_AS(mu_regularity(gl2, chi, Vec{2, 0}, MuRegMode::Decomposed, &neither),
                  std::invalid_argument);
  const std::vector<Vec> short_sum{{1, 0}};
  CHECK_THROWS_AS(mu_regularity(gl2, chi, Vec{2, 0}, MuRegMode::Decomposed, &short_sum),
                  std::invalid_argument);
}

TEST_CASE("principal series irreducibility for GL_n") {
  const CoinvariantLattice gl2 = lattice_of("GL2");
  CHECK_FALSE(gln_principal_series_irreducible(gl2, from_std(gl2, {cv("q"), cv("1")})));
  CHECK(gln_principal_series_irreducible(gl2, from_std(gl2, {cv("q^2"), cv("1")})));
  CHECK(gln_principal_series_irreducible(gl2, from_std(gl2, {cv("2"), cv("1")})));

  const CoinvariantLattice gl3 = lattice_of("GL3");
  CHECK_FALSE(
      gln_principal_series_irreducible(gl3, from_std(gl3, {cv("q^2"), cv("q"), cv("1")})));
  CHECK(gln_principal_series_irreducible(gl3, from_std(gl3, {cv("q^4"), cv("q^2"), cv("1")})));

  const CoinvariantLattice u3 = lattice_of("2A2");
  UnramifiedCharacter one_val;
  one_val.values = {cv("q")};
  CHECK_THROWS_AS(gln_principal_series_irreducible(u3, one_val), std::invalid_argument);
  const CoinvariantLattice a2 = lattice_of("A2");
  CHECK_THROWS_AS(gln_principal_series_irreducible(a2, from_std(a2, {cv("q"), cv("1")})),
                  std::invalid_argument);
}
