#pragma once

#include <json.hpp>

#include "gregory/bernoulli2.hpp"
#include "gregory/classical.hpp"
#include "gregory/polynomial.hpp"
#include "gregory/qbernoulli2.hpp"
#include "gregory/rational.hpp"
#include "gregory/rational_function.hpp"

// JSON encodings:
//   rational           "p/q", sign on p, q >= 1
//   polynomial         {"var": "x"|"q", "coeffs": ["c0", "c1", ...]} ascending
//   rational function  {"num": <polynomial in q>, "den": <polynomial in q>}
//   b2 / bernoulli     [<rational>, ...] indexed from 0
//   qb2                [<rational function>, ...]
//   atable             [[<polynomial in x>, ...], ...], row N-1 holds N entries
//   ctable             [[<rational>, ...], ...], row N-1 holds floor((N-1)/2)+1 entries
// Decoders throw std::invalid_argument on schema violations.
namespace gregory::json {

using Json = nlohmann::ordered_json;

Json encode(const Rational& r);
Json encode(const Polynomial& p, char var = 'x');
Json encode(const RationalFunction& f);
Json encode(const B2Table& t);
Json encode(const BTable& t);
Json encode(const QB2Table& t);
Json encode(const ATable& t);
Json encode(const CTable& t);

Rational decode_rational(const Json& j);
Polynomial decode_polynomial(const Json& j, char expected_var = 0);
// Input need not be reduced; the result is canonical.
RationalFunction decode_rational_function(const Json& j);
B2Table decode_b2(const Json& j);
BTable decode_bernoulli(const Json& j);
QB2Table decode_qb2(const Json& j);
ATable decode_atable(const Json& j);
CTable decode_ctable(const Json& j);

}  // namespace gregory::json
