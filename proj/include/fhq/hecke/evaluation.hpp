#pragma once

#include <vector>

#include "fhq/hecke/hecke_elem.hpp"
#include "fhq/symfunc/symfunc.hpp"

namespace fhq::hecke {

// e_0, ..., e_n of q L_1, ..., q L_n in H_n(q).
std::vector<HeckeElem> elementary_jm(int n);

// f restricted to n variables, evaluated at q L_1, ..., q L_n with t -> n.
HeckeElem ev_n(const symfunc::SymFuncElem& f, int n);
HeckeElem ev_n(const symfunc::EPolyElem& p, int n);

}  // namespace fhq::hecke
