#include "fhq/json_io.hpp"

#include <string>

#include "fhq/error.hpp"

namespace fhq::io {

json to_json(const exact::Laurent& x) {
  json j = json::object();
  for (const auto& [e, c] : x.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

exact::Laurent laurent_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "Laurent JSON must be an object");
  std::vector<exact::Laurent::Term> terms;
  for (const auto& [key, value] : j.items())
    terms.emplace_back(std::stoi(key), exact::Integer(value.get<std::string>()));
  return exact::Laurent::from_terms(std::move(terms));
}

json to_json(const exact::IvPoly& x) {
  json j = json::object();
  for (const auto& [r, c] : x.terms()) j[std::to_string(r)] = to_json(c);
  return j;
}

exact::IvPoly ivpoly_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "IVLPoly JSON must be an object");
  exact::IvPoly out;
  for (const auto& [key, value] : j.items())
    out += exact::IvPoly::binomial_term(laurent_from_json(value), std::stoi(key));
  return out;
}

json to_json(const combinat::Partition& p) { return json(p.parts()); }

combinat::Partition partition_from_json(const json& j) { return combinat::Partition(j.get<std::vector<int>>()); }

json to_json(const combinat::StandardTableau& t) { return json(t.rows()); }

json to_json(const perm::Permutation& w) { return json(w.one_line()); }

perm::Permutation permutation_from_json(const json& j) {
  auto images = j.get<std::vector<int>>();
  return perm::Permutation::from_one_line(images);
}

json to_json(const hecke::HeckeElem& z) {
  json terms = json::array();
  for (const auto& [w, c] : z.terms()) terms.push_back({{"perm", to_json(w)}, {"coeff", to_json(c)}});
  return {{"n", z.rank()}, {"terms", terms}};
}

hecke::HeckeElem hecke_from_json(const json& j) {
  hecke::HeckeElem z(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) z.add_term(permutation_from_json(t.at("perm")), laurent_from_json(t.at("coeff")));
  return z;
}

json to_json(const symfunc::SymFuncElem& f) {
  json out = json::array();
  for (const auto& [lambda, c] : f.terms()) out.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return out;
}

symfunc::SymFuncElem symfunc_from_json(const json& j) {
  symfunc::SymFuncElem f;
  for (const auto& t : j) f.add_term(partition_from_json(t.at("partition")), ivpoly_from_json(t.at("coeff")));
  return f;
}

json to_json(const symfunc::EPolyElem& p) {
  json out = json::array();
  for (const auto& [nu, c] : p.terms()) out.push_back({{"epartition", to_json(nu)}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const std::map<combinat::Partition, exact::IvPoly>& terms, const char* value_key) {
  json out = json::array();
  for (const auto& [lambda, c] : terms) out.push_back({{"lambda", to_json(lambda)}, {value_key, to_json(c)}});
  return out;
}

std::map<combinat::Partition, exact::IvPoly> ivpoly_map_from_json(const json& j, const char* value_key) {
  std::map<combinat::Partition, exact::IvPoly> out;
  for (const auto& t : j) out.emplace(partition_from_json(t.at("lambda")), ivpoly_from_json(t.at(value_key)));
  return out;
}

}  // namespace fhq::io
