#pragma once

#include "json.hpp"

#include "superfermat/ideals.hpp"
#include "superfermat/superpoly.hpp"
#include "superfermat/theories.hpp"
#include "superfermat/weil.hpp"

namespace superfermat {

using Json = nlohmann::json;

// {"even":[e1..em],"odd":[i1..ik]} with the odd list strictly ascending.
Json to_json(const SuperMonomial &m);
SuperMonomial monomial_from_json(const Json &j, Signature sig);

// {"sig":[m,n],"terms":[{"even":[...],"odd":[...],"coef":"p/q"}]}
// Terms are listed in print order; coefficients are strings to stay exact.
Json to_json(const SuperPoly &f);
SuperPoly superpoly_from_json(const Json &j);

// {"theory":"Poly","sig":[m,n],"relations":[<superpoly>...]}
Json to_json(const FinitePresentation &p);
FinitePresentation presentation_from_json(const Json &j);

// {"weil":<presentation>,"coeffs":[{"basis":<monomial>,"value":<float>}]}
Json to_json(const JetElement &jet);

} // namespace superfermat
