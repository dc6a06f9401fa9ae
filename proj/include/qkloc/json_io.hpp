#pragma once

#include <nlohmann/json.hpp>

#include "qkloc/localization.hpp"

namespace qkloc {

using Json = nlohmann::ordered_json;

// Every number is a string: rationals as "p/q", exponents as rationals.
Json json_of(const Rational& r);
Json json_of(const Cyclotomic& c);                       // {"order", "coeffs"}
Json json_of(const Monomial& m, int root_order);         // exponent strings
Json json_of(const TorusScalar& s);                      // {"num": [{"mono","coeff"}], "den": [{"mu","mult"}]}
Json json_of(const QFunction& f);                        // {"num": [[p, scalar]], "den": [{"a","mu","mult"}]}
Json json_of(const PPolynomial& p);                      // [scalar per P-power]
Json json_of(const PQFunction& f);                       // {"num": [[p, ppoly]], "den": [...]}
Json json_of(const PoleLocus& l, int root_order);        // {"zeta_exp", "root"}
Json json_of(const RecursionReport& r);

Json session_json(const AlgebraContext& ctx, int max_degree);

}  // namespace qkloc
