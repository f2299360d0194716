#pragma once

#include <map>

#include <json.hpp>

#include "fhq/combinat/partition.hpp"
#include "fhq/combinat/tableau.hpp"
#include "fhq/exact/ivpoly.hpp"
#include "fhq/hecke/hecke_elem.hpp"
#include "fhq/symfunc/symfunc.hpp"

namespace fhq::io {

using json = nlohmann::json;

json to_json(const exact::Laurent& x);
exact::Laurent laurent_from_json(const json& j);

json to_json(const exact::IvPoly& x);
exact::IvPoly ivpoly_from_json(const json& j);

json to_json(const combinat::Partition& p);
combinat::Partition partition_from_json(const json& j);

json to_json(const combinat::StandardTableau& t);

json to_json(const perm::Permutation& w);
perm::Permutation permutation_from_json(const json& j);

json to_json(const hecke::HeckeElem& z);
hecke::HeckeElem hecke_from_json(const json& j);

json to_json(const symfunc::SymFuncElem& f);
symfunc::SymFuncElem symfunc_from_json(const json& j);

json to_json(const symfunc::EPolyElem& p);

// [{"lambda": [...], <value_key>: IVLPoly}] in partition order.
json to_json(const std::map<combinat::Partition, exact::IvPoly>& terms, const char* value_key);
std::map<combinat::Partition, exact::IvPoly> ivpoly_map_from_json(const json& j, const char* value_key);

}  // namespace fhq::io
