#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kottwitz/averaging.hpp"
#include "kottwitz/characters.hpp"
#include "kottwitz/galois.hpp"
#include "kottwitz/groups.hpp"
#include "kottwitz/kottwitz.hpp"
#include "kottwitz/tilting.hpp"
#include "kottwitz/weights.hpp"

namespace kottwitz {

using ojson = nlohmann::ordered_json;

std::string vec_str(const Vec& v);
std::string qvec_str(const QVec& v);
std::string class_str(const CoinvariantLattice& lat, const CoinvariantClass& c);
std::string kappa_str(const KappaClass& k);

ojson describe_doc(const GroupSpec& g, const CoinvariantLattice& lat);

ojson bgmu_doc(const GroupSpec& g, const CoinvariantLattice& lat, const Vec& mu,
               const std::vector<KottwitzPoint>& points, const std::vector<Polygon>* polygons);
std::string bgmu_tsv(const CoinvariantLattice& lat, const std::vector<KottwitzPoint>& points,
                     const std::vector<Polygon>* polygons);

ojson weights_doc(const RootDatum& rd, const WeightSystem& ws, const CoinvariantLattice* lat);
std::string weights_tsv(const RootDatum& rd, const WeightSystem& ws,
                        const CoinvariantLattice* lat);

ojson ladder_doc(const GroupSpec& g, const UnramifiedCharacter& chi, const ConditionLadder& l);

ojson tilting_doc(const RootDatum& rd, const Vec& mu, long long ell, const JantzenSum& sum,
                  bool tilting);
std::string tilting_table_tsv(const RootDatum& rd);

ojson averaging_doc(const GroupSpec& g, const CoinvariantLattice& lat, const Vec& mu,
                    const AveragingReport& report);

}  // namespace kottwitz
