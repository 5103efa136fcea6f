#pragma once

// Dense univariate polynomials over Z, c[0] + c[1] q + ..., used as the
// workhorse behind LaurentPoly and RationalFunction. Inputs never carry
// trailing zeros.

#include "qtetra/qfield.hpp"

#include <vector>

namespace qtetra::detail {

using Poly = std::vector<BigInt>;

void trim(Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly add(const Poly& a, const Poly& b);
void negate(Poly& p);
BigInt content(const Poly& p);
void divide_scalar(Poly& p, const BigInt& c);
bool is_unit_one(const Poly& p);
/// a / b; throws std::logic_error when b does not divide a exactly.
Poly div_exact(const Poly& a, const Poly& b);
/// gcd in Z[q], normalized to a positive leading coefficient. Both nonzero.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qtetra::detail
