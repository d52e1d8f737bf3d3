#pragma once

#include <string>

#include "gregory/bernoulli2.hpp"
#include "gregory/classical.hpp"
#include "gregory/qbernoulli2.hpp"

namespace gregory::format {

// CSV: one row per entry, no header.
//   b2, bernoulli   n,p/q
//   qb2             n,<num coeffs ';'-joined>,<den coeffs ';'-joined>
//   atable          N,k,<coeffs ';'-joined>
//   ctable          N,k,p/q
std::string csv(const B2Table& t);
std::string csv(const BTable& t);
std::string csv(const QB2Table& t);
std::string csv(const ATable& t);
std::string csv(const CTable& t);

// LaTeX align-style lines. The a-table renders as
//   s_{N}(n) &= <a_0^(N)(n)> b_{n} + ... + <a_{N-1}^(N)(n)> b_{n-N+1}, ending in a LaTeX line break
// with linear factors pulled out of each coefficient polynomial.
std::string latex(const B2Table& t);
std::string latex(const BTable& t);
std::string latex(const QB2Table& t);
std::string latex(const ATable& t);
std::string latex(const CTable& t);

std::string latex_rational(const Rational& r);
std::string latex_polynomial(const Polynomial& p, char var);
// Constant times powers of integer linear factors times a primitive rest,
// e.g. "\frac{1}{2}(n-2)(2n-5)".
std::string latex_factored(const Polynomial& p, char var);

}  // namespace gregory::format
