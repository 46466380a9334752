#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kottwitz/averaging.hpp"
#include "kottwitz/characters.hpp"
#include "kottwitz/galois.hpp"
#include "kottwitz/groups.hpp"
#include "kottwitz/kottwitz.hpp"
#include "kottwitz/render.hpp"
#include "kottwitz/tilting.hpp"
#include "kottwitz/weights.hpp"

namespace {

using namespace kottwitz;

long long effective_cap(long long flag_cap) {
  if (flag_cap > 0) return flag_cap;
  if (const char* env = std::getenv("KOTTWITZ_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return kDefaultCap;
}

GroupSpec load_group(const std::string& name, const std::string& twist_json) {
  GroupSpec g = build_group(name);
  if (!twist_json.empty()) {
    const auto j = nlohmann::json::parse(twist_json);
    IntMat sigma;
    for (const auto& row : j) sigma.push_back(row.get<Vec>());
    g.twist = GaloisTwist{sigma, 1};
    g.name = name + "+twist";
  }
  return g;
}

Vec parse_mu(const RootDatum& rd, const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("mu: empty");
  if (spec[0] == 'w') {
    const int i = std::stoi(spec.substr(1));
    if (i < 1 || i > rd.ss) throw std::invalid_argument("mu: fundamental index out of range");
    Vec mu = vzero(rd.rank);
    if (rd.type_tag.rfind("GL", 0) == 0) {
      for (int j = 0; j < i; ++j) mu[j] = 1;
    } else {
      mu[i - 1] = 1;
    }
    return mu;
  }
  Vec mu;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) mu.push_back(std::stoll(tok));
  if (static_cast<int>(mu.size()) != rd.rank)
    throw std::invalid_argument("mu: expected " + std::to_string(rd.rank) + " coordinates");
  return mu;
}

UnramifiedCharacter parse_character(const CoinvariantLattice& lat, const std::string& spec) {
  UnramifiedCharacter chi;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) chi.values.push_back(CharacterValue::parse(tok));
  if (chi.values.size() != lat.inv_basis.size())
    throw std::invalid_argument("character: expected " + std::to_string(lat.inv_basis.size()) +
                                " values (one per invariant basis vector)");
  return chi;
}

void emit(const ojson& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kottwitz-set, weight, character-ladder, tilting and averaging computations"};
  app.require_subcommand(1);

  std::string group, twist_json, mu_spec, chi_spec, phi_spec, format, level, golden;
  long long ell = 0;
  long long cap = 0;
  bool coinvariant = false;

  auto add_group_opts = [&](CLI::App* cmd, bool need_mu) {
    cmd->add_option("--group,--type,-g", group, "group name, e.g. GL3, B2, 2A2, 3D4")
        ->required();
    cmd->add_option("--twist", twist_json, "custom twist as a JSON integer matrix");
    if (need_mu)
      cmd->add_option("--mu", mu_spec, "dominant cocharacter: comma integers or w<i>")
          ->required();
    cmd->add_option("--cap", cap, "orbit/weight cap (default 10^6 or KOTTWITZ_CAP)");
  };

  auto* cmd_describe = app.add_subcommand("describe", "root datum and coinvariant lattice");
  add_group_opts(cmd_describe, false);
  cmd_describe->add_option("--format", format, "json");

  auto* cmd_bgmu = app.add_subcommand("bgmu", "unramified Kottwitz classes below mu");
  add_group_opts(cmd_bgmu, true);
  cmd_bgmu->add_option("--format", format, "tsv (default) or json");

  auto* cmd_weights = app.add_subcommand("weights", "weight multiplicities of V_mu");
  add_group_opts(cmd_weights, true);
  cmd_weights->add_flag("--coinvariant", coinvariant, "group weights by coinvariant class");
  cmd_weights->add_option("--format", format, "tsv (default) or json");

  auto* cmd_check = app.add_subcommand("check-character", "genericity/regularity ladder");
  add_group_opts(cmd_check, false);
  cmd_check->add_option("--chi", chi_spec, "values c*q^k, one per invariant basis vector")
      ->required();
  cmd_check->add_option("--level", level,
                        "required level: weakly-generic | generic | "
                        "weakly-normalized-regular | normalized-regular | regular");
  cmd_check->add_option("--format", format, "json");

  auto* cmd_tilting = app.add_subcommand("tilting", "Jantzen sum test at one prime");
  add_group_opts(cmd_tilting, true);
  cmd_tilting->add_option("--ell", ell, "prime")->required();
  cmd_tilting->add_option("--format", format, "json");

  auto* cmd_table = app.add_subcommand("tilting-table", "per-coweight non-tilting primes");
  add_group_opts(cmd_table, false);
  cmd_table->add_option("--golden", golden, "fixture TSV to compare against");

  auto* cmd_avg = app.add_subcommand("averaging", "refined averaging multiset check");
  add_group_opts(cmd_avg, true);
  cmd_avg->add_option("--phi", phi_spec, "parameter values, one per invariant basis vector")
      ->required();
  cmd_avg->add_option("--format", format, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const long long the_cap = effective_cap(cap);

    if (cmd_describe->parsed()) {
      const GroupSpec g = load_group(group, twist_json);
      const CoinvariantLattice lat = coinvariants(g.rd, g.twist);
      emit(describe_doc(g, lat));
      return 0;
    }

    if (cmd_bgmu->parsed()) {
      const GroupSpec g = load_group(group, twist_json);
      const CoinvariantLattice lat = coinvariants(g.rd, g.twist);
      const Vec mu = parse_mu(g.rd, mu_spec);
      const std::vector<KottwitzPoint> points = enumerate_bgmu_un(lat, mu);
      std::vector<Polygon> polys;
      const bool is_gln = g.rd.type_tag.rfind("GL", 0) == 0 && lat.twist.order == 1;
      if (is_gln) polys = bgmu_gln(g.rd.rank, mu);
      if (format == "json") {
        emit(bgmu_doc(g, lat, mu, points, is_gln ? &polys : nullptr));
      } else {
        std::cout << bgmu_tsv(lat, points, is_gln ? &polys : nullptr);
        if (!is_gln)
          std::cout << "# full B(G,mu) enumeration is only available for split GL_n\n";
      }
      return 0;
    }

    if (cmd_weights->parsed()) {
      const GroupSpec g = load_group(group, twist_json);
      const CoinvariantLattice lat = coinvariants(g.rd, g.twist);
      const Vec mu = parse_mu(g.rd, mu_spec);
      const WeightSystem ws = freudenthal(g.rd, mu, the_cap);
      if (format == "json") {
        emit(weights_doc(g.rd, ws, coinvariant ? &lat : nullptr));
      } else {
        std::cout << weights_tsv(g.rd, ws, coinvariant ? &lat : nullptr);
      }
      return 0;
    }

    if (cmd_check->parsed()) {
      const GroupSpec g = load_group(group, twist_json);
      const CoinvariantLattice lat = coinvariants(g.rd, g.twist);
      const UnramifiedCharacter chi = parse_character(lat, chi_spec);
      const ConditionLadder l = condition_ladder(lat, chi, the_cap);
      emit(ladder_doc(g, chi, l));
      bool ok = true;
      if (level == "weakly-generic") ok = l.weakly_generic;
      else if (level == "generic" || level.empty()) ok = l.generic;
      else if (level == "weakly-normalized-regular") ok = l.weakly_normalized_regular;
      else if (level == "normalized-regular") ok = l.normalized_regular;
      else if (level == "regular") ok = l.regular;
      else throw std::invalid_argument("unknown level '" + level + "'");
      return ok ? 0 : 1;
    }

    if (cmd_tilting->parsed()) {
      const GroupSpec g = load_group(group, twist_json);
      const Vec mu = parse_mu(g.rd, mu_spec);
      const JantzenSum sum =
          ell >= jantzen_bound(g.rd, mu) ? JantzenSum{} : jantzen_sum(g.rd, mu, ell);
      emit(tilting_doc(g.rd, mu, ell, sum, sum.vanishes()));
      return 0;
    }

    if (cmd_table->parsed()) {
      const GroupSpec g = load_group(group, twist_json);
      const std::string table = tilting_table_tsv(g.rd);
      std::cout << table;
      if (!golden.empty()) {
        std::ifstream in(golden);
        if (!in) throw std::invalid_argument("cannot open golden file '" + golden + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        if (buf.str() != table) {
          std::cerr << "tilting-table: mismatch against " << golden << "\n";
          return 1;
        }
      }
      return 0;
    }

    if (cmd_avg->parsed()) {
      const GroupSpec g = load_group(group, twist_json);
      const CoinvariantLattice lat = coinvariants(g.rd, g.twist);
      const Vec mu = parse_mu(g.rd, mu_spec);
      const UnramifiedCharacter phi = parse_character(lat, phi_spec);
      const AveragingReport report = refined_averaging_check(lat, mu, phi, the_cap);
      emit(averaging_doc(g, lat, mu, report));
      return report.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
